//! Vendored graph fixtures and the sixty-vertex composite builder.
//!
//! Files live in the crate's `data/` directory and are embedded at build
//! time. Each carries a SHA-256 checksum so that copies loaded from disk
//! can be checked too.

use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::cycle_enum::find_hamiltonian_cycle;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::graph6::parse_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// 24-vertex cubic 2-connected triangle-free non-hamiltonian graph
    /// with four longest cycles (House of Graphs 50421).
    Fig5,
    /// 18-vertex graph with a unique hamiltonian cycle and two vertices
    /// of degree 4, used as the input of the composite.
    Royle18,
    /// 60-vertex graph with a unique longest cycle (House of Graphs 50422).
    RoyleComposite,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Fig5, Fixture::Royle18, Fixture::RoyleComposite];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig5 => "fig5",
            Fixture::Royle18 => "royle18",
            Fixture::RoyleComposite => "royle_composite",
        }
    }

    pub fn file_name(self) -> String {
        format!("{}.g6", self.name())
    }

    /// House of Graphs identifier, where one exists.
    pub fn hog_id(self) -> Option<u32> {
        match self {
            Fixture::Fig5 => Some(50421),
            Fixture::Royle18 => None,
            Fixture::RoyleComposite => Some(50422),
        }
    }

    fn embedded(self) -> &'static str {
        match self {
            Fixture::Fig5 => include_str!("../../data/fig5.g6"),
            Fixture::Royle18 => include_str!("../../data/royle18.g6"),
            Fixture::RoyleComposite => include_str!("../../data/royle_composite.g6"),
        }
    }

    fn sha256(self) -> &'static str {
        match self {
            Fixture::Fig5 => "757d2f52aa10abdf89d35dbc715e02a0c4ae1d3f87a86f8759cbe3ecd0a01efa",
            Fixture::Royle18 => "c8a269c70fc2f8c8dec433b85f605ad4e837199c8c53792cf3384b789ba48ac7",
            Fixture::RoyleComposite => {
                "8660cf8bdc45e62949fdbd912f060cbceb6730f90d457128a44f1920548c1cf5"
            }
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    fn error(self, reason: impl Into<String>) -> Error {
        Error::Fixture {
            name: self.name().to_string(),
            hog: self
                .hog_id()
                .map_or_else(|| "none".to_string(), |id| id.to_string()),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn decode(fixture: Fixture, text: &str) -> Result<Graph> {
    if hex_digest(text) != fixture.sha256() {
        return Err(fixture.error("checksum mismatch"));
    }
    parse_graph6(text.trim_end()).map_err(|e| fixture.error(e.to_string()))
}

/// Loads an embedded fixture.
pub fn load_fixture(fixture: Fixture) -> Result<Graph> {
    decode(fixture, fixture.embedded())
}

/// Loads a fixture from `dir`, checking it against the recorded checksum.
pub fn load_fixture_from(fixture: Fixture, dir: &Path) -> Result<Graph> {
    let path = dir.join(fixture.file_name());
    let text = std::fs::read_to_string(&path)
        .map_err(|e| fixture.error(format!("{}: {e}", path.display())))?;
    decode(fixture, &text)
}

/// Cut points of the 24-vertex graph (0-based): the two edges removed
/// to make room for the 18-vertex inserts.
const COMPOSITE_CUTS: [Edge; 2] = [(1, 2), (16, 17)];

/// Builds the 60-vertex composite from the 24-vertex graph and the
/// 18-vertex graph with a unique hamiltonian cycle.
///
/// Two edges `ab`, `cd` are removed from the 24-vertex graph. In each of
/// two copies of the 18-vertex graph the smallest edge `uv` of its
/// hamiltonian cycle is removed, and `a-u, b-v` (first copy) and
/// `c-u', d-v'` (second copy) are added.
pub fn build_royle_composite(base: &Graph, royle: &Graph) -> Result<Graph> {
    let ham = find_hamiltonian_cycle(royle)?
        .ok_or_else(|| Error::Precondition("insert graph is not hamiltonian".into()))?;
    let k = ham.len();
    let (u, v) = (0..k)
        .map(|i| edge(ham[i], ham[(i + 1) % k]))
        .min()
        .expect("cycle is nonempty");
    let insert = royle.without_edge(u, v)?;
    let mut out = base.clone();
    for (a, b) in COMPOSITE_CUTS {
        base.check_edge((a, b))?;
        out.remove_edge(a, b);
        let off = out.append(&insert);
        out.add_edge(a, u + off);
        out.add_edge(b, v + off);
    }
    Ok(out)
}
