//! Canonical text form of rings and ideals.
//!
//! Tables are written row-major as flat integer lists; element ids are the
//! table indices, so the output is byte-stable for a given ring.

use serde::{Deserialize, Serialize};

use super::{IdealSet, Ring, RingTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRecord {
    pub label: String,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub names: Vec<String>,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub ring: String,
    pub generators: Vec<String>,
    pub members: Vec<usize>,
}

impl RingRecord {
    pub fn from_ring(r: &RingTable) -> Self {
        RingRecord {
            label: r.label().to_string(),
            order: r.order(),
            zero: r.zero(),
            one: r.one(),
            names: r.names().to_vec(),
            add: r.add_table(),
            mul: r.mul_table(),
        }
    }

    /// Rebuilds (and re-validates) the ring.
    pub fn to_ring(&self) -> Result<Ring> {
        if self.order != self.names.len() {
            return Err(Error::Shape(format!("order {} but {} element names", self.order, self.names.len())));
        }
        RingTable::new(self.label.clone(), self.names.clone(), self.add.clone(), self.mul.clone(), self.zero, self.one)
    }

    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string(self).expect("ring record serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl IdealRecord {
    pub fn from_ideal(i: &IdealSet) -> Self {
        IdealRecord {
            ring: i.ring().label().to_string(),
            generators: i.generator_names(),
            members: i.members().to_vec(),
        }
    }

    pub fn to_ideal(&self, ring: &Ring) -> Result<IdealSet> {
        if ring.label() != self.ring {
            return Err(Error::RingMismatch);
        }
        if let Some(bad) = self.members.iter().find(|&&e| e >= ring.order()) {
            return Err(Error::Parse(format!("member id {bad} out of range")));
        }
        IdealSet::new(ring, self.members.iter().copied().collect())
    }

    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string(self).expect("ideal record serializes")
    }
}
