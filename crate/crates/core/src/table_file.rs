//! Table-presented Garside contexts.
//!
//! A table file is TOML with these keys:
//!
//! ```toml
//! name = "exotic-aba-bb"
//! atoms = ["a", "b"]
//! # positive words, atom names separated by spaces; index 0 is the
//! # identity (empty string), the last entry is Δ
//! simples = ["", "a", "b", "a b", "b a"]
//! # left_complement[x][y] = x\y, the simple z such that x·z is the right
//! # lcm of simples x and y
//! left_complement = [[0, 1, 2, 3, 4], ...]
//! # φ as a permutation of simple indices, φ(z) = (z\Δ)\Δ
//! phi = [0, 1, 2, 3, 4]
//! ```
//!
//! Every entry is validated when a context is built from the file.

use serde::{Deserialize, Serialize};

use crate::error::{GarsideError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub name: String,
    pub atoms: Vec<String>,
    pub simples: Vec<String>,
    pub left_complement: Vec<Vec<usize>>,
    pub phi: Vec<usize>,
}

impl TableFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| GarsideError::MalformedTable(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name = {:?}\n", self.name));
        out.push_str(&format!("atoms = {}\n", string_list(&self.atoms)));
        out.push_str(&format!("simples = {}\n", string_list(&self.simples)));
        out.push_str("left_complement = [\n");
        for row in &self.left_complement {
            out.push_str(&format!("    {:?},\n", row));
        }
        out.push_str("]\n");
        out.push_str(&format!("phi = {:?}\n", self.phi));
        out
    }

    /// Simple words as 0-based atom indices.
    pub fn simple_words(&self) -> Result<Vec<Vec<u8>>> {
        if self.atoms.is_empty() || self.atoms.len() > 64 {
            return Err(GarsideError::MalformedTable("need between 1 and 64 atoms".into()));
        }
        for (k, name) in self.atoms.iter().enumerate() {
            if name.is_empty() || name.contains(char::is_whitespace) || self.atoms[..k].contains(name) {
                return Err(GarsideError::MalformedTable(format!("bad atom name {name:?}")));
            }
        }
        self.simples
            .iter()
            .map(|w| {
                w.split_whitespace()
                    .map(|tok| {
                        self.atoms
                            .iter()
                            .position(|a| a == tok)
                            .map(|p| p as u8)
                            .ok_or_else(|| GarsideError::MalformedTable(format!("unknown atom {tok:?}")))
                    })
                    .collect()
            })
            .collect()
    }
}

fn string_list(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| format!("{s:?}")).collect();
    format!("[{}]", quoted.join(", "))
}
