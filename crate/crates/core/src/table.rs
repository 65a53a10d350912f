//! Bundled table of knots given by braid words.

use std::path::Path;

use serde::Deserialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../data/knots.csv");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: u32,
    pub braid: String,
}

impl KnotRecord {
    pub fn braid_word(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.braid, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
}

impl KnotTable {
    pub fn bundled() -> Self {
        Self::from_csv(BUNDLED).expect("bundled knot table is well formed")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Table(format!("{}: {e}", path.display())))?;
        Self::from_csv(&text)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let records = reader
            .deserialize()
            .collect::<std::result::Result<Vec<KnotRecord>, _>>()
            .map_err(|e| Error::Table(e.to_string()))?;
        Ok(Self { records })
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    /// Records with at most `max_crossings` crossings, in table order.
    pub fn up_to(&self, max_crossings: u32) -> Vec<&KnotRecord> {
        self.records
            .iter()
            .filter(|r| r.crossings <= max_crossings)
            .collect()
    }

    pub fn lookup(&self, name: &str) -> Result<&KnotRecord> {
        if let Some(r) = self.records.iter().find(|r| r.name == name) {
            return Ok(r);
        }
        let mut near: Vec<(usize, &str)> = self
            .records
            .iter()
            .map(|r| (strsim::levenshtein(name, &r.name), r.name.as_str()))
            .filter(|&(d, _)| d <= 2)
            .collect();
        near.sort();
        Err(Error::UnknownKnot {
            name: name.to_string(),
            near: near
                .into_iter()
                .take(5)
                .map(|(_, n)| n.to_string())
                .collect(),
        })
    }
}

pub fn knot_lookup(name: &str) -> Result<KnotRecord> {
    KnotTable::bundled().lookup(name).cloned()
}
