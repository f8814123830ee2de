fn main() -> std::process::ExitCode {
    longcycles::cli::main()
}
