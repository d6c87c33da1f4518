//! Exact decision procedures for presentations whose 2-cells are determined
//! by how they route wires.
//!
//! Under wire tracking, a term denotes, for each wire of its target, the set
//! of source wires feeding it. For the monad presentation this is the fibre
//! description of a monotone map, which determines the map.

use std::collections::BTreeSet;

use super::{Computad, Term};
use crate::verdict::{Verdict, Witness};

/// How a 2-generator moves wires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// All source wires flow into a single target wire (or none, for units).
    Merge,
    /// A single source wire fans out to every target wire (or none).
    Split,
    /// Two wires cross.
    Swap,
    /// No wire semantics.
    Opaque,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Merge => "merge",
            Shape::Split => "split",
            Shape::Swap => "swap",
            Shape::Opaque => "opaque",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        match s {
            "merge" => Some(Shape::Merge),
            "split" => Some(Shape::Split),
            "swap" => Some(Shape::Swap),
            "opaque" => Some(Shape::Opaque),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    /// Merges and swaps, read top to bottom.
    WireTracking,
    /// Splits and swaps, read bottom to top.
    CoWireTracking,
}

pub type Wiring = Vec<BTreeSet<usize>>;

impl Oracle {
    pub fn name(self) -> &'static str {
        match self {
            Oracle::WireTracking => "wire tracking",
            Oracle::CoWireTracking => "reverse wire tracking",
        }
    }

    pub fn parse(s: &str) -> Option<Oracle> {
        match s {
            "wire-tracking" => Some(Oracle::WireTracking),
            "co-wire-tracking" => Some(Oracle::CoWireTracking),
            _ => None,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Oracle::WireTracking => "wire-tracking",
            Oracle::CoWireTracking => "co-wire-tracking",
        }
    }

    /// The wiring a term denotes. For the reverse variant the roles of
    /// source and target are exchanged.
    pub fn wiring(self, c: &Computad, t: &Term) -> Result<Wiring, String> {
        let (start, fan_in) = match self {
            Oracle::WireTracking => (t.src.len(), Shape::Merge),
            Oracle::CoWireTracking => (t.tgt.len(), Shape::Split),
        };
        let mut state: Wiring = (0..start).map(|i| BTreeSet::from([i])).collect();
        let step = |state: &mut Wiring, offset: usize, gen: usize, input: usize, output: usize| {
            let g = &c.two[gen];
            let block: Vec<BTreeSet<usize>> = state.drain(offset..offset + input).collect();
            let produced: Vec<BTreeSet<usize>> = match g.shape {
                s if s == fan_in => {
                    let all: BTreeSet<usize> = block.into_iter().flatten().collect();
                    if output > 1 {
                        return Err(format!("`{}` has more than one output wire", g.name));
                    }
                    vec![all; output]
                }
                Shape::Swap if input == 2 && output == 2 => vec![block[1].clone(), block[0].clone()],
                _ => return Err(format!("`{}` has no {} semantics", g.name, self.name())),
            };
            state.splice(offset..offset, produced);
            Ok(())
        };
        match self {
            Oracle::WireTracking => {
                for l in &t.layers {
                    let g = &c.two[l.gen];
                    step(&mut state, l.offset, l.gen, g.src.len(), g.tgt.len())?;
                }
            }
            Oracle::CoWireTracking => {
                for l in t.layers.iter().rev() {
                    let g = &c.two[l.gen];
                    step(&mut state, l.offset, l.gen, g.tgt.len(), g.src.len())?;
                }
            }
        }
        Ok(state)
    }

    pub fn decide(self, c: &Computad, a: &Term, b: &Term) -> Verdict {
        match (self.wiring(c, a), self.wiring(c, b)) {
            (Ok(x), Ok(y)) if x == y => Verdict::Equal(Witness::Oracle(self.name().into())),
            (Ok(x), Ok(y)) => Verdict::NotEqual(format!("wirings differ: {x:?} vs {y:?}")),
            (Err(e), _) | (_, Err(e)) => Verdict::NotEqual(format!("oracle cannot read term: {e}")),
        }
    }

    /// Whether every generator has a shape this oracle understands.
    pub fn supports(self, c: &Computad) -> bool {
        let fan_in = match self {
            Oracle::WireTracking => Shape::Merge,
            Oracle::CoWireTracking => Shape::Split,
        };
        c.two.iter().all(|g| {
            g.shape == Shape::Swap && g.src.len() == 2 && g.tgt.len() == 2
                || g.shape == fan_in
                    && match self {
                        Oracle::WireTracking => g.tgt.len() == 1,
                        Oracle::CoWireTracking => g.src.len() == 1,
                    }
        })
    }
}
