//! JSON term-list encoding of forms:
//! `{"n":..,"k":..,"terms":[{"num":"..","den":"..","alpha":[..],"sigma":[..]}]}`.

use serde::{Deserialize, Serialize};

use super::form::DiffForm;
use super::index::{IndexSet, MultiIndex};
use super::monomial::FormMonomial;
use crate::error::{Error, Result};
use crate::scalar;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub alpha: Vec<u32>,
    pub sigma: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FormJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<TermJson>,
}

impl From<&DiffForm> for FormJson {
    fn from(f: &DiffForm) -> Self {
        FormJson {
            n: f.n(),
            k: f.k(),
            terms: f
                .terms()
                .map(|(m, c)| {
                    let (num, den) = scalar::to_parts(c);
                    TermJson {
                        num,
                        den,
                        alpha: m.alpha.exponents().to_vec(),
                        sigma: m.sigma.to_vec(),
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<&FormJson> for DiffForm {
    type Error = Error;

    fn try_from(j: &FormJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.alpha.len() != j.n {
                return Err(Error::Input(format!(
                    "alpha {:?} does not have length {}",
                    t.alpha, j.n
                )));
            }
            let sigma = IndexSet::new(&t.sigma, j.n)?;
            terms.push((
                FormMonomial::new(MultiIndex::new(t.alpha.clone()), sigma),
                scalar::from_parts(&t.num, &t.den)?,
            ));
        }
        DiffForm::from_terms(j.n, j.k, terms)
    }
}

impl DiffForm {
    pub fn to_json(&self) -> FormJson {
        FormJson::from(self)
    }

    pub fn from_json(j: &FormJson) -> Result<Self> {
        DiffForm::try_from(j)
    }
}
