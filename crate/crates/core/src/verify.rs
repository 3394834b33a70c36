//! Coefficient-by-coefficient comparison of series against enumeration.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{enumerate_admissible, frequency_condition_counts, Counts, DiagramConfig, FrequencyCondition, Variant};
use crate::error::{CmppError, Result};
use crate::qseries::{bounded_p0_series, series_with_offset, BivariateSeries, SeriesFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyFamily {
    Main,
    Star,
    Starstar,
    Ag,
    Bressoud,
    BoundedP0,
}

impl VerifyFamily {
    pub fn name(self) -> &'static str {
        match self {
            VerifyFamily::Main => "main",
            VerifyFamily::Star => "star",
            VerifyFamily::Starstar => "starstar",
            VerifyFamily::Ag => "ag",
            VerifyFamily::Bressoud => "bressoud",
            VerifyFamily::BoundedP0 => "bounded-p0",
        }
    }

    /// Whether the index is `a` (frequency families) rather than `i`.
    pub fn uses_a(self) -> bool {
        matches!(self, VerifyFamily::Ag | VerifyFamily::Bressoud)
    }
}

impl fmt::Display for VerifyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyFamily {
    type Err = CmppError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "main" => VerifyFamily::Main,
            "star" => VerifyFamily::Star,
            "starstar" | "star_star" => VerifyFamily::Starstar,
            "ag" => VerifyFamily::Ag,
            "bressoud" => VerifyFamily::Bressoud,
            "bounded-p0" => VerifyFamily::BoundedP0,
            other => return Err(CmppError::Usage(format!("unknown family '{other}'"))),
        })
    }
}

/// Largest part allowed when enumerating against the bounded polynomial with bound `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSemantics {
    /// Parts at most `M`.
    AtMost,
    /// Parts at most `M - 1`.
    BelowBound,
}

impl BoundSemantics {
    pub fn max_part(self, bound: usize) -> Option<usize> {
        match self {
            BoundSemantics::AtMost => Some(bound),
            BoundSemantics::BelowBound => bound.checked_sub(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VerifyRequest {
    pub family: VerifyFamily,
    pub ell: usize,
    pub index: usize,
    pub max_weight: usize,
    pub max_z: usize,
    pub bound: Option<usize>,
    pub semantics: BoundSemantics,
    /// Added to every non-empty linear form; non-zero only for negative controls.
    pub offset: i64,
}

impl VerifyRequest {
    pub fn new(family: VerifyFamily, ell: usize, index: usize, max_weight: usize) -> Self {
        VerifyRequest {
            family,
            ell,
            index,
            max_weight,
            max_z: max_weight,
            bound: None,
            semantics: BoundSemantics::AtMost,
            offset: 0,
        }
    }

    pub fn with_bound(mut self, bound: usize, semantics: BoundSemantics) -> Self {
        self.bound = Some(bound);
        self.semantics = semantics;
        self
    }

    pub fn with_offset(mut self, offset: i64) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_max_z(mut self, max_z: usize) -> Self {
        self.max_z = max_z;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub j: usize,
    pub n: usize,
    pub series: String,
    pub count: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: VerifyFamily,
    pub ell: usize,
    pub index: usize,
    pub max_weight: usize,
    pub max_z: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantics: Option<BoundSemantics>,
    pub offset: i64,
    pub cells: Vec<CellReport>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.matches)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["family", "ell", "index", "j", "n", "series", "count", "match"])?;
        for c in &self.cells {
            w.write_record([
                self.family.name().to_string(),
                self.ell.to_string(),
                self.index.to_string(),
                c.j.to_string(),
                c.n.to_string(),
                c.series.clone(),
                c.count.clone(),
                c.matches.to_string(),
            ])?;
        }
        w.flush()
    }
}

fn compare(request: &VerifyRequest, series: &BivariateSeries, counts: &Counts) -> VerificationReport {
    let mut cells = Vec::new();
    for j in 0..=request.max_z {
        for n in 0..=request.max_weight {
            let s = series.coeff(j, n);
            let c = BigInt::from(counts.get(j, n));
            if s == BigInt::from(0) && c == BigInt::from(0) {
                continue;
            }
            cells.push(CellReport {
                j,
                n,
                matches: s == c,
                series: s.to_string(),
                count: c.to_string(),
            });
        }
    }
    let pass = cells.iter().all(|c| c.matches);
    VerificationReport {
        family: request.family,
        ell: request.ell,
        index: request.index,
        max_weight: request.max_weight,
        max_z: request.max_z,
        bound: request.bound,
        semantics: request.bound.map(|_| request.semantics),
        offset: request.offset,
        cells,
        pass,
    }
}

/// Builds both sides of one identity and compares every `(j, n)` within truncation.
pub fn verify(request: &VerifyRequest) -> Result<VerificationReport> {
    let (w, z) = (request.max_weight, request.max_z);
    let diagram = |variant: Variant, family: SeriesFamily| -> Result<(BivariateSeries, Counts)> {
        let config = DiagramConfig::single(request.ell, request.index, variant)?;
        let series = series_with_offset(family, request.ell, request.index, w, z, request.offset)?;
        Ok((series, enumerate_admissible(&config, w, None)))
    };
    let frequency = |kind: FrequencyCondition, family: SeriesFamily| -> Result<(BivariateSeries, Counts)> {
        let series = series_with_offset(family, request.ell, request.index, w, z, request.offset)?;
        let counts = frequency_condition_counts(kind, request.ell, request.index, w)?;
        Ok((series, counts))
    };
    let (series, counts) = match request.family {
        VerifyFamily::Main => diagram(Variant::Standard, SeriesFamily::Main)?,
        VerifyFamily::Star => diagram(Variant::Star, SeriesFamily::Star)?,
        VerifyFamily::Starstar => diagram(Variant::StarStar, SeriesFamily::StarStar)?,
        VerifyFamily::Ag => frequency(FrequencyCondition::Rrg, SeriesFamily::Ag)?,
        VerifyFamily::Bressoud => frequency(FrequencyCondition::Bressoud, SeriesFamily::Bressoud)?,
        VerifyFamily::BoundedP0 => {
            let bound = request
                .bound
                .ok_or_else(|| CmppError::Usage("bounded-p0 needs a bound".into()))?;
            if request.offset != 0 {
                return Err(CmppError::Usage("offsets apply to unbounded families only".into()));
            }
            let config = DiagramConfig::single(request.ell, 0, Variant::Standard)?;
            let series = bounded_p0_series(request.ell, bound, w, z)?;
            let counts = match request.semantics.max_part(bound) {
                Some(top) => enumerate_admissible(&config, w, Some(top)),
                None => enumerate_admissible(&config, 0, None),
            };
            (series, counts)
        }
    };
    Ok(compare(request, &series, &counts))
}

/// Runs every request, in parallel, capped by `CMPP_THREADS` when set.
/// Reports come back sorted by request.
pub fn verify_grid(requests: &[VerifyRequest]) -> Result<Vec<(VerifyRequest, VerificationReport)>> {
    let mut sorted = requests.to_vec();
    sorted.sort();
    let threads = std::env::var("CMPP_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0);
    let run = || -> Result<Vec<_>> {
        sorted
            .par_iter()
            .map(|r| verify(r).map(|rep| (r.clone(), rep)))
            .collect()
    };
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CmppError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rogers_ramanujan_passes() {
        let r = verify(&VerifyRequest::new(VerifyFamily::Main, 1, 1, 20)).unwrap();
        assert!(r.pass);
        assert!(!r.cells.is_empty());
    }

    #[test]
    fn negative_control_fails() {
        let r = verify(&VerifyRequest::new(VerifyFamily::Main, 1, 1, 20).with_offset(1)).unwrap();
        assert!(!r.pass);
        assert!(r.mismatches().count() > 0);
    }

    #[test]
    fn frequency_families_pass() {
        for fam in [VerifyFamily::Ag, VerifyFamily::Bressoud] {
            for a in 1..=3 {
                let r = verify(&VerifyRequest::new(fam, 2, a, 14)).unwrap();
                assert!(r.pass, "{fam} a={a}");
            }
        }
    }

    #[test]
    fn bounded_requires_bound() {
        assert!(verify(&VerifyRequest::new(VerifyFamily::BoundedP0, 1, 0, 10)).is_err());
    }

    #[test]
    fn grid_is_sorted_and_deterministic() {
        let reqs = vec![
            VerifyRequest::new(VerifyFamily::Star, 2, 1, 10),
            VerifyRequest::new(VerifyFamily::Main, 2, 0, 10),
        ];
        let out = verify_grid(&reqs).unwrap();
        assert_eq!(out[0].0.family, VerifyFamily::Main);
        assert!(out.iter().all(|(_, r)| r.pass));
        assert_eq!(out, verify_grid(&reqs).unwrap());
    }

    #[test]
    fn parse_family() {
        assert_eq!("bounded-p0".parse::<VerifyFamily>().unwrap(), VerifyFamily::BoundedP0);
        assert!("nope".parse::<VerifyFamily>().is_err());
    }
}
