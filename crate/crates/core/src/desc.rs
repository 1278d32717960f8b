//! Textual graph descriptors and dispatch over the concrete graph types.
//!
//! Accepted forms: `symt:<n>`, `hamming:<n>:<q>`, `johnson:<n>:<w>`,
//! `srg:<family>:<params>` (see [`SrgFamily::parse`]) and `file:<path>` for an
//! adjacency-list file.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classic::{hamming_closed, johnson_closed, HammingView, JohnsonView, SrgFamily};
use crate::error::{Error, Result};
use crate::graph::{ExplicitGraph, GraphView};
use crate::perm::Permutation;
use crate::symt::{n_sym_closed, SymnTView, Validity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Symt(usize),
    Hamming { n: usize, q: u64 },
    Johnson { n: usize, w: usize },
    Srg(SrgFamily),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph descriptor `{s}` has no `:`")))?;
        let nums = |want: usize| -> Result<Vec<u64>> {
            let parts: Vec<&str> = rest.split(':').collect();
            if parts.len() != want {
                return Err(Error::Parse(format!("`{s}` needs {want} numeric parameter(s)")));
            }
            parts
                .iter()
                .map(|p| {
                    p.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad number `{p}` in `{s}`")))
                })
                .collect()
        };
        let spec = match kind {
            "symt" => GraphSpec::Symt(nums(1)?[0] as usize),
            "hamming" => {
                let v = nums(2)?;
                GraphSpec::Hamming {
                    n: v[0] as usize,
                    q: v[1],
                }
            }
            "johnson" => {
                let v = nums(2)?;
                GraphSpec::Johnson {
                    n: v[0] as usize,
                    w: v[1] as usize,
                }
            }
            "srg" => GraphSpec::Srg(SrgFamily::parse(rest)?),
            "file" => {
                if rest.is_empty() {
                    return Err(Error::Parse("file: needs a path".into()));
                }
                GraphSpec::File(PathBuf::from(rest))
            }
            _ => return Err(Error::Parse(format!("unknown graph kind `{kind}`"))),
        };
        Ok(spec)
    }
}

fn srg_descriptor(f: &SrgFamily) -> String {
    match f {
        SrgFamily::Triangle(m) => format!("triangle:{m}"),
        SrgFamily::Lattice(m) => format!("lattice:{m}"),
        SrgFamily::Paley(q) => format!("paley:{q}"),
        SrgFamily::Multipartite { t, m } => format!("multipartite:{t}:{m}"),
        SrgFamily::Complement(inner) => format!("complement:{}", srg_descriptor(inner)),
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Symt(n) => write!(f, "symt:{n}"),
            GraphSpec::Hamming { n, q } => write!(f, "hamming:{n}:{q}"),
            GraphSpec::Johnson { n, w } => write!(f, "johnson:{n}:{w}"),
            GraphSpec::Srg(fam) => write!(f, "srg:{}", srg_descriptor(fam)),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// One of the supported graphs, built from a [`GraphSpec`].
#[derive(Clone, Debug)]
pub enum AnyGraph {
    Symt(SymnTView),
    Hamming(HammingView),
    Johnson(JohnsonView),
    Explicit(ExplicitGraph),
}

/// A computation generic over the graph type.
pub trait GraphVisitor {
    type Output;
    fn visit<G: GraphView>(self, g: &G) -> Self::Output;
}

/// A closed value and how far it can be trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedN {
    pub value: BigInt,
    pub validity: Validity,
}

impl AnyGraph {
    pub fn build(spec: &GraphSpec) -> Result<Self> {
        let g = match spec {
            GraphSpec::Symt(n) => AnyGraph::Symt(SymnTView::new(*n)?),
            GraphSpec::Hamming { n, q } => AnyGraph::Hamming(HammingView::new(*n, *q)?),
            GraphSpec::Johnson { n, w } => AnyGraph::Johnson(JohnsonView::new(*n, *w)?),
            GraphSpec::Srg(fam) => AnyGraph::Explicit(fam.build()?.with_name(spec.to_string())),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
                let g = ExplicitGraph::from_adjacency_text(&text)?;
                if !g.is_connected() {
                    return Err(Error::InvalidArgument(format!("{} is not connected", path.display())));
                }
                AnyGraph::Explicit(g.with_name(spec.to_string()))
            }
        };
        Ok(g)
    }

    pub fn parse(descriptor: &str) -> Result<Self> {
        AnyGraph::build(&descriptor.parse()?)
    }

    pub fn visit<V: GraphVisitor>(&self, v: V) -> V::Output {
        match self {
            AnyGraph::Symt(g) => v.visit(g),
            AnyGraph::Hamming(g) => v.visit(g),
            AnyGraph::Johnson(g) => v.visit(g),
            AnyGraph::Explicit(g) => v.visit(g),
        }
    }

    /// A uniformly random vertex, formatted; the same seed gives the same
    /// vertex.
    pub fn random_vertex(&self, seed: u64) -> String {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self {
            AnyGraph::Symt(g) => {
                let mut images: Vec<usize> = (1..=g.n()).collect();
                images.shuffle(&mut rng);
                g.format_vertex(&Permutation::from_images(&images).expect("a shuffle is a permutation"))
            }
            AnyGraph::Hamming(h) => {
                let size = h.q().pow(h.n() as u32);
                h.format_vertex(&rng.random_range(0..size))
            }
            AnyGraph::Johnson(j) => {
                let mask = rand::seq::index::sample(&mut rng, j.n(), j.w())
                    .into_iter()
                    .fold(0u64, |m, k| m | (1 << k));
                j.format_vertex(&mask)
            }
            AnyGraph::Explicit(g) => g.format_vertex(&rng.random_range(0..g.vertex_count())),
        }
    }

    /// The closed `N(Γ, r)` for graphs that have one.
    pub fn closed_n(&self, spec: &GraphSpec, r: usize) -> Result<Option<ClosedN>> {
        let proven = |value| {
            Some(ClosedN {
                value,
                validity: Validity::Proven,
            })
        };
        Ok(match (self, spec) {
            (AnyGraph::Symt(g), _) => {
                let c = n_sym_closed(g.n(), r)?;
                Some(ClosedN {
                    value: c.value,
                    validity: c.validity,
                })
            }
            (AnyGraph::Hamming(h), _) => proven(hamming_closed(h.n(), h.q(), r)?),
            (AnyGraph::Johnson(j), _) => proven(johnson_closed(j.n(), j.w(), r)?),
            (AnyGraph::Explicit(_), GraphSpec::Srg(fam)) if r == 1 => {
                fam.expected()?.n1.and_then(|v| proven(BigInt::from(v)))
            }
            _ => None,
        })
    }
}
