//! Verification suites over parameter grids, with per-cell verdicts.
//!
//! Cells run in parallel; the report is sorted by cell key so output does
//! not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::element::{
    certify_commuting_diagram, certify_unisolvence, certify_vanishing_trace_unisolvence, random_form,
};
use crate::error::{Error, Result};
use crate::exterior::DiffForm;
use crate::spaces::{
    verify_degree_property, verify_inclusion, verify_koszul_exactness, verify_subcomplex, verify_trace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Koszul,
    Degree,
    Subcomplex,
    Inclusion,
    Trace,
    Unisolvence,
    Vanishing,
    Commute,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Koszul,
        Suite::Degree,
        Suite::Subcomplex,
        Suite::Inclusion,
        Suite::Trace,
        Suite::Unisolvence,
        Suite::Vanishing,
        Suite::Commute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Koszul => "koszul",
            Suite::Degree => "degree",
            Suite::Subcomplex => "subcomplex",
            Suite::Inclusion => "inclusion",
            Suite::Trace => "trace",
            Suite::Unisolvence => "unisolvence",
            Suite::Vanishing => "vanishing",
            Suite::Commute => "commute",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

/// Parameters for one run of the suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    pub r_min: i64,
    pub r_max: i64,
    /// Restricts to a single form degree when set.
    pub k: Option<usize>,
    /// Restricts the Koszul suite to a single `l` when set.
    pub l: Option<u32>,
    pub seed: u64,
    /// Sampled forms per `k` for the commuting-diagram suite.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn new(n: usize, r_min: i64, r_max: i64) -> Self {
        VerifyConfig {
            n,
            r_min,
            r_max,
            k: None,
            l: None,
            seed: 0,
            samples: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CellKey {
    pub suite: Suite,
    pub n: usize,
    pub r: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellVerdict {
    #[serde(flatten)]
    pub key: CellKey,
    pub pass: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cells: Vec<CellVerdict>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellVerdict> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// `(passed, total)` for one suite.
    pub fn tally(&self, suite: Suite) -> (usize, usize) {
        let cells = self.cells.iter().filter(|c| c.key.suite == suite);
        let (mut ok, mut total) = (0, 0);
        for c in cells {
            total += 1;
            ok += usize::from(c.pass);
        }
        (ok, total)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn cells_for(suite: Suite, cfg: &VerifyConfig) -> Vec<CellKey> {
    let n = cfg.n;
    let ks = |hi: usize| -> Vec<usize> {
        match cfg.k {
            Some(k) if k <= hi => vec![k],
            Some(_) => vec![],
            None => (0..=hi).collect(),
        }
    };
    let mut out = Vec::new();
    for r in cfg.r_min.max(1)..=cfg.r_max {
        let key = |k: Option<usize>, l: Option<u32>| CellKey { suite, n, r, k, l };
        match suite {
            Suite::Koszul => {
                if n == 0 {
                    continue;
                }
                for k in ks(n - 1) {
                    for l in 0..r as u32 {
                        if cfg.l.is_none_or(|want| want == l) {
                            out.push(key(Some(k), Some(l)));
                        }
                    }
                }
            }
            Suite::Subcomplex => out.extend(ks(n).into_iter().filter(|&k| k >= 1).map(|k| key(Some(k), None))),
            Suite::Trace if n < 2 => {}
            Suite::Degree | Suite::Inclusion | Suite::Trace | Suite::Unisolvence | Suite::Vanishing => {
                out.extend(ks(n).into_iter().map(|k| key(Some(k), None)))
            }
            Suite::Commute => {
                if r >= n as i64 {
                    out.push(key(None, None));
                }
            }
        }
    }
    out
}

/// Seeded sample forms for the commuting diagram: `per_k` forms of each
/// degree `k < n`, polynomial degree up to `r + 1`.
pub fn commuting_samples(n: usize, r: i64, per_k: usize, seed: u64) -> Vec<DiffForm> {
    let mut rng = StdRng::seed_from_u64(seed ^ ((n as u64) << 32) ^ r as u64);
    (0..n)
        .flat_map(|k| (0..per_k).map(move |_| k))
        .map(|k| random_form(&mut rng, n, k, r + 1))
        .collect()
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).unwrap_or(serde_json::Value::Null)
}

fn run_cell(key: &CellKey, cfg: &VerifyConfig) -> Result<CellVerdict> {
    let (n, r) = (key.n, key.r);
    let k = key.k.unwrap_or(0);
    let (pass, detail) = match key.suite {
        Suite::Koszul => {
            let rep = verify_koszul_exactness(n, r, key.l.unwrap_or(0), k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Degree => {
            let rep = verify_degree_property(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Subcomplex => {
            let rep = verify_subcomplex(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Inclusion => {
            let rep = verify_inclusion(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Trace => {
            let rep = verify_trace(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Unisolvence => {
            let rep = certify_unisolvence(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Vanishing => {
            let rep = certify_vanishing_trace_unisolvence(n, r, k)?;
            (rep.pass(), to_value(&rep))
        }
        Suite::Commute => {
            let samples = commuting_samples(n, r, cfg.samples, cfg.seed);
            let rep = certify_commuting_diagram(n, r, &samples)?;
            (rep.pass(), to_value(&rep))
        }
    };
    Ok(CellVerdict {
        key: key.clone(),
        pass,
        detail,
    })
}

/// Runs the given suites over the grid described by `cfg`.
pub fn run_suites(suites: &[Suite], cfg: &VerifyConfig) -> Result<VerifyReport> {
    let keys: Vec<CellKey> = suites.iter().flat_map(|&s| cells_for(s, cfg)).collect();
    let mut cells = keys
        .par_iter()
        .map(|key| run_cell(key, cfg))
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(VerifyReport {
        seed: cfg.seed,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_list("koszul,trace").unwrap(), vec![Suite::Koszul, Suite::Trace]);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn cell_enumeration() {
        let cfg = VerifyConfig::new(2, 1, 3);
        // k ∈ {0,1}, l ∈ 0..r
        assert_eq!(cells_for(Suite::Koszul, &cfg).len(), 2 * (1 + 2 + 3));
        assert_eq!(cells_for(Suite::Subcomplex, &cfg).len(), 2 * 3);
        assert_eq!(cells_for(Suite::Commute, &cfg).len(), 2);
        assert!(cells_for(Suite::Trace, &VerifyConfig::new(1, 1, 3)).is_empty());
    }

    #[test]
    fn small_run_passes_and_is_sorted() {
        let mut cfg = VerifyConfig::new(2, 1, 2);
        cfg.samples = 5;
        let rep = run_suites(&Suite::ALL, &cfg).unwrap();
        assert!(rep.pass());
        assert!(rep.cells.windows(2).all(|w| w[0].key < w[1].key));
        assert_eq!(rep.tally(Suite::Commute), (1, 1));
    }

    #[test]
    fn samples_are_seeded() {
        assert_eq!(commuting_samples(2, 2, 4, 7), commuting_samples(2, 2, 4, 7));
        assert_ne!(commuting_samples(2, 2, 4, 7), commuting_samples(2, 2, 4, 8));
    }
}
