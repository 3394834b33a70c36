//! Relative heights by repeated sweeps and folds.
//!
//! Round `h` walks the still-unassigned parts by virtual magnitude. A part gets
//! height `h` when exactly `h` same-magnitude cells below it lie strictly above
//! the right leg of its predecessor and the left leg of its successor. Assigned
//! parts are folded away: every virtual magnitude at least `m + h + 1` drops by
//! `2(h + 1)`.

use serde::Serialize;

use crate::diagram::{CellAddress, CmppPartition, DiagramConfig};
use crate::error::{CmppError, Result};
use crate::qseries::HeightProfile;

#[derive(Clone, Debug, PartialEq, Eq)]
struct WorkingPart {
    index: usize,
    virtual_magnitude: i64,
    row: usize,
}

/// Relative height of each part, aligned with `CmppPartition::parts`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightAssignment {
    ell: usize,
    heights: Vec<usize>,
}

impl HeightAssignment {
    pub fn new(ell: usize, heights: Vec<usize>) -> Self {
        HeightAssignment { ell, heights }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn get(&self, index: usize) -> usize {
        self.heights[index]
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Indices of parts with height `h`, in magnitude order.
    pub fn indices_with(&self, h: usize) -> Vec<usize> {
        (0..self.heights.len())
            .filter(|&j| self.heights[j] == h)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldEvent {
    pub round: usize,
    pub part_index: usize,
    pub magnitude: usize,
    pub virtual_magnitude: i64,
    pub shift: i64,
    /// Working parts whose virtual magnitude lies strictly within `h + 1` of the
    /// folded one, the folded part included.
    pub concealed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundSummary {
    pub round: usize,
    /// `(part index, cell count)` for every part still unassigned at the end of the round.
    pub remaining: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FoldTrace {
    pub folds: Vec<FoldEvent>,
    pub rounds: Vec<RoundSummary>,
}

impl FoldTrace {
    /// After round `h` every unassigned part would need a count above `h`, and
    /// each fold hides exactly the part it assigns.
    pub fn invariants_hold(&self) -> bool {
        let rounds_ok = self
            .rounds
            .iter()
            .all(|r| r.remaining.iter().all(|&(_, c)| c > r.round));
        let folds_ok = self
            .folds
            .iter()
            .all(|f| f.shift == 2 * (f.round as i64 + 1) && f.concealed == 1);
        rounds_ok && folds_ok
    }
}

/// Cells `(r', m)` with `r' > r` of the same parity class, not deleted, strictly
/// above both legs.
fn count_cells(
    config: &DiagramConfig,
    m: i64,
    row: usize,
    pred: CellAddress,
    succ: Option<CellAddress>,
) -> usize {
    let variant = config.variant();
    let odd = variant.row_holds_odd(row);
    ((row + 1)..=config.rows())
        .filter(|&r| variant.row_holds_odd(r) == odd && !variant.is_deleted(r, m))
        .filter(|&r| r <= pred.row || m > pred.magnitude + (r - pred.row) as i64)
        .filter(|&r| match succ {
            Some(s) => r <= s.row || m < s.magnitude - (r - s.row) as i64,
            None => true,
        })
        .count()
}

fn run(config: &DiagramConfig, partition: &CmppPartition, trace: Option<&mut FoldTrace>) -> Result<HeightAssignment> {
    let i = config.require_single()?;
    let ell = config.ell();
    let initial = config.variant().initial_cell(ell, i);
    let cell = |w: &WorkingPart| CellAddress::new(w.row, w.virtual_magnitude);
    let mut work: Vec<WorkingPart> = partition
        .cells()
        .into_iter()
        .enumerate()
        .map(|(index, c)| WorkingPart {
            index,
            virtual_magnitude: c.magnitude,
            row: c.row,
        })
        .collect();
    let mut heights: Vec<Option<usize>> = vec![None; work.len()];
    let mut local = FoldTrace::default();
    let recording = trace.is_some();
    for h in 0..ell {
        let mut j = 0;
        while j < work.len() {
            let w = &work[j];
            let pred = if j > 0 { cell(&work[j - 1]) } else { initial };
            let succ = work.get(j + 1).map(cell);
            let count = count_cells(config, w.virtual_magnitude, w.row, pred, succ);
            if count != h {
                j += 1;
                continue;
            }
            let m = w.virtual_magnitude;
            let index = w.index;
            heights[index] = Some(h);
            let shift = 2 * (h as i64 + 1);
            if recording {
                let concealed = work
                    .iter()
                    .filter(|x| (x.virtual_magnitude - m).abs() < h as i64 + 1)
                    .count();
                local.folds.push(FoldEvent {
                    round: h,
                    part_index: index,
                    magnitude: partition.parts()[index].magnitude,
                    virtual_magnitude: m,
                    shift,
                    concealed,
                });
            }
            work.remove(j);
            for x in work.iter_mut() {
                if x.virtual_magnitude > m + h as i64 {
                    x.virtual_magnitude -= shift;
                }
            }
        }
        if recording {
            let remaining = (0..work.len())
                .map(|j| {
                    let pred = if j > 0 { cell(&work[j - 1]) } else { initial };
                    let succ = work.get(j + 1).map(cell);
                    let w = &work[j];
                    (w.index, count_cells(config, w.virtual_magnitude, w.row, pred, succ))
                })
                .collect();
            local.rounds.push(RoundSummary { round: h, remaining });
        }
    }
    let mut out = Vec::with_capacity(heights.len());
    for (idx, h) in heights.into_iter().enumerate() {
        let part = partition.parts()[idx];
        match h {
            Some(h) if h <= part.absolute_height => out.push(h),
            Some(h) => {
                return Err(CmppError::Invariant(format!(
                    "part {part} got relative height {h} above its absolute height"
                )))
            }
            None => {
                return Err(CmppError::Invariant(format!(
                    "part {part} received no relative height"
                )))
            }
        }
    }
    if let Some(t) = trace {
        *t = local;
    }
    Ok(HeightAssignment::new(ell, out))
}

/// Relative heights of an admissible partition with a single unit initial condition.
pub fn relative_heights(partition: &CmppPartition) -> Result<HeightAssignment> {
    check_input(partition)?;
    run(partition.config(), partition, None)
}

/// As [`relative_heights`], also returning the fold trace.
pub fn relative_heights_traced(partition: &CmppPartition) -> Result<(HeightAssignment, FoldTrace)> {
    check_input(partition)?;
    let mut trace = FoldTrace::default();
    let a = run(partition.config(), partition, Some(&mut trace))?;
    Ok((a, trace))
}

/// Skips the admissibility check; for callers that have just established it.
pub(crate) fn relative_heights_unchecked(partition: &CmppPartition) -> Result<HeightAssignment> {
    run(partition.config(), partition, None)
}

fn check_input(partition: &CmppPartition) -> Result<()> {
    partition.config().require_single()?;
    if !crate::diagram::is_admissible(partition) {
        return Err(CmppError::Domain(format!(
            "partition {partition} is not admissible"
        )));
    }
    Ok(())
}

pub fn height_profile(assignment: &HeightAssignment) -> HeightProfile {
    let mut n = vec![0; assignment.ell];
    for &h in &assignment.heights {
        n[h] += 1;
    }
    HeightProfile::new(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightEntry {
    pub magnitude: usize,
    pub absolute_height: usize,
    pub relative_height: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightsReport {
    pub heights: Vec<HeightEntry>,
    pub profile: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<FoldTrace>,
}

impl HeightsReport {
    pub fn new(partition: &CmppPartition, assignment: &HeightAssignment, trace: Option<FoldTrace>) -> Self {
        let heights = partition
            .parts()
            .iter()
            .zip(assignment.heights())
            .map(|(p, &h)| HeightEntry {
                magnitude: p.magnitude,
                absolute_height: p.absolute_height,
                relative_height: h,
            })
            .collect();
        HeightsReport {
            heights,
            profile: height_profile(assignment).n_vec().to_vec(),
            trace,
        }
    }
}
