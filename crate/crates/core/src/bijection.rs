//! Forward and backward moves, base partitions, and the decomposition of an
//! admissible partition into a base partition plus a vector partition.
//!
//! A move shifts one part by one unit (two for the top height class on the
//! `Star` and `StarStar` grids). Legality is decided by trying every candidate
//! cell, keeping those that stay admissible, and recomputing the relative
//! heights: a candidate is accepted only if the heights come out as predicted.

use std::fmt;

use serde::Serialize;

use crate::diagram::{cell_of, pairwise_admissible, CmppPartition, DiagramConfig, Part, Variant};
use crate::error::{CmppError, Result};
use crate::heights::{height_profile, relative_heights, relative_heights_unchecked, HeightAssignment};
use crate::qseries::{linear_form, HeightProfile, LinearFamily};

/// Linear-form family realized by a grid variant.
pub fn family_of(variant: Variant) -> LinearFamily {
    match variant {
        Variant::Standard | Variant::Reflected => LinearFamily::Main,
        Variant::Star => LinearFamily::Star,
        Variant::StarStar => LinearFamily::StarStar,
    }
}

/// Weight carried by one move of a part with relative height `h`.
pub fn unit(variant: Variant, ell: usize, h: usize) -> usize {
    match variant {
        Variant::Star | Variant::StarStar if h + 1 == ell => 2,
        _ => 1,
    }
}

/// Move counts per height class; component `s` is non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VectorPartition {
    components: Vec<Vec<usize>>,
}

impl VectorPartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        for (s, c) in components.iter().enumerate() {
            if c.windows(2).any(|w| w[0] > w[1]) {
                return Err(CmppError::Domain(format!(
                    "component {} is not non-decreasing: {c:?}",
                    s + 1
                )));
            }
        }
        Ok(VectorPartition { components })
    }

    pub fn zero(profile: &HeightProfile) -> Self {
        VectorPartition {
            components: profile.n_vec().iter().map(|&n| vec![0; n]).collect(),
        }
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn shape(&self) -> HeightProfile {
        HeightProfile::new(self.components.iter().map(Vec::len).collect())
    }

    /// `sum_s unit_s * sum_j lambda_{s,j}`.
    pub fn weight(&self, variant: Variant) -> usize {
        let ell = self.components.len();
        self.components
            .iter()
            .enumerate()
            .map(|(s, c)| unit(variant, ell, s) * c.iter().sum::<usize>())
            .sum()
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "({})", comps.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOutcome {
    pub partition: CmppPartition,
    pub assignment: HeightAssignment,
    /// Index, in the new partition, of the part that keeps the moved height class.
    pub tracked: usize,
    /// The exceptional rule exchanged two heights.
    pub swapped: bool,
    pub weight_delta: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
}

fn row_of(config: &DiagramConfig, part: Part) -> usize {
    cell_of(config, part).expect("parts carry valid cells").row
}

/// Parts that `part` could become after a shift by `delta`.
fn candidates(config: &DiagramConfig, part: Part, delta: i64) -> Vec<Part> {
    let m = part.magnitude as i64 + delta;
    if m < 1 {
        return Vec::new();
    }
    let row = row_of(config, part);
    let rows: Vec<usize> = if delta.abs() == 2 {
        vec![row]
    } else {
        vec![row.wrapping_sub(1), row + 1]
    };
    rows.into_iter()
        .filter_map(|r| config.variant().height_at(config.ell(), r, m))
        .map(|a| Part::new(m as usize, a))
        .collect()
}

/// Tries every candidate for part `idx`; `swap` exchanges the expected heights
/// of `idx` and `swap`, and the tracked part is then `swap`.
fn shift(
    partition: &CmppPartition,
    assignment: &HeightAssignment,
    idx: usize,
    delta: i64,
    swap: Option<usize>,
) -> Result<Vec<MoveOutcome>> {
    let config = partition.config();
    let old = partition.parts();
    let mut out = Vec::new();
    for cand in candidates(config, old[idx], delta) {
        if old
            .iter()
            .enumerate()
            .any(|(j, p)| j != idx && p.magnitude == cand.magnitude)
        {
            continue;
        }
        let mut labelled: Vec<(Part, usize)> = old.iter().copied().zip(0..).collect();
        labelled[idx].0 = cand;
        labelled.sort_by_key(|(p, _)| p.magnitude);
        let parts: Vec<Part> = labelled.iter().map(|(p, _)| *p).collect();
        let next = CmppPartition::new_unchecked(config.clone(), parts);
        if !pairwise_admissible(config, &next) {
            continue;
        }
        let heights = relative_heights_unchecked(&next)?;
        let mut expected = assignment.heights().to_vec();
        if let Some(other) = swap {
            expected.swap(idx, other);
        }
        let ok = labelled
            .iter()
            .enumerate()
            .all(|(pos, &(_, orig))| heights.get(pos) == expected[orig]);
        if ok {
            let tracked_orig = swap.unwrap_or(idx);
            let tracked = labelled
                .iter()
                .position(|&(_, orig)| orig == tracked_orig)
                .expect("every label present");
            out.push(MoveOutcome {
                weight_delta: next.weight() as i64 - partition.weight() as i64,
                partition: next,
                assignment: heights,
                tracked,
                swapped: swap.is_some(),
            });
        }
    }
    Ok(out)
}

fn single(mut sols: Vec<MoveOutcome>, what: &str) -> Result<Option<MoveOutcome>> {
    match sols.len() {
        0 => Ok(None),
        1 => Ok(sols.pop()),
        n => Err(CmppError::Invariant(format!("{what}: {n} candidate moves validate"))),
    }
}

fn step(
    partition: &CmppPartition,
    assignment: &HeightAssignment,
    idx: usize,
    direction: Direction,
) -> Result<Option<MoveOutcome>> {
    let config = partition.config();
    let parts = partition.parts();
    let h = assignment.get(idx);
    let part = parts[idx];
    let row = row_of(config, part);
    let u = unit(config.variant(), config.ell(), h) as i64;
    let gap = 2 * h + 2;
    match direction {
        Direction::Forward => {
            if let Some(&next) = parts.get(idx + 1) {
                if next.magnitude == part.magnitude + gap
                    && row_of(config, next) == row
                    && assignment.get(idx + 1) > h
                {
                    let sols = shift(partition, assignment, idx + 1, 1, Some(idx))?;
                    let sols = sols
                        .into_iter()
                        .map(|mut s| {
                            s.tracked = s
                                .partition
                                .parts()
                                .iter()
                                .position(|p| !parts.contains(p))
                                .expect("one part changed");
                            s
                        })
                        .collect();
                    return single(sols, "forward exceptional move");
                }
            }
            single(shift(partition, assignment, idx, u, None)?, "forward move")
        }
        Direction::Backward => {
            let mut sols = shift(partition, assignment, idx, -u, None)?;
            if idx > 0 && u == 1 && assignment.get(idx - 1) > h {
                let pred = parts[idx - 1];
                let pred_row = row_of(config, pred);
                for s in shift(partition, assignment, idx, -1, Some(idx - 1))? {
                    let landed = s
                        .partition
                        .parts()
                        .iter()
                        .find(|p| !parts.contains(p))
                        .copied();
                    if let Some(p) = landed {
                        if p.magnitude == pred.magnitude + gap && row_of(config, p) == pred_row {
                            sols.push(s);
                        }
                    }
                }
            }
            single(sols, "backward move")
        }
    }
}

fn check_fresh(partition: &CmppPartition, assignment: &HeightAssignment, idx: usize) -> Result<()> {
    if idx >= partition.len() {
        return Err(CmppError::OutOfRange(format!(
            "part index {idx} with {} parts",
            partition.len()
        )));
    }
    if relative_heights(partition)? != *assignment {
        return Err(CmppError::Usage("height assignment does not match the partition".into()));
    }
    Ok(())
}

/// Forward move of part `idx`; `None` when no move is possible.
pub fn forward_move(
    partition: &CmppPartition,
    assignment: &HeightAssignment,
    idx: usize,
) -> Result<Option<MoveOutcome>> {
    check_fresh(partition, assignment, idx)?;
    step(partition, assignment, idx, Direction::Forward)
}

/// Backward move of part `idx`; `None` when no move is possible.
pub fn backward_move(
    partition: &CmppPartition,
    assignment: &HeightAssignment,
    idx: usize,
) -> Result<Option<MoveOutcome>> {
    check_fresh(partition, assignment, idx)?;
    step(partition, assignment, idx, Direction::Backward)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeResult {
    pub profile: HeightProfile,
    pub base: CmppPartition,
    pub vector: VectorPartition,
}

impl DecomposeResult {
    /// `weight(base) + sum unit_s * lambda` against the given weight.
    pub fn weight_check(&self, weight: usize) -> bool {
        self.base.weight() + self.vector.weight(self.base.config().variant()) == weight
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeJson {
    pub profile: Vec<usize>,
    pub base: Vec<Part>,
    pub vector: Vec<Vec<usize>>,
    pub weight_check: bool,
}

impl DecomposeJson {
    pub fn new(result: &DecomposeResult, weight: usize) -> Self {
        DecomposeJson {
            profile: result.profile.n_vec().to_vec(),
            base: result.base.parts().to_vec(),
            vector: result.vector.components().to_vec(),
            weight_check: result.weight_check(weight),
        }
    }
}

fn require_admissible(partition: &CmppPartition) -> Result<usize> {
    let i = partition.config().require_single()?;
    if !pairwise_admissible(partition.config(), partition) {
        return Err(CmppError::Domain(format!(
            "partition {partition} is not admissible"
        )));
    }
    Ok(i)
}

fn retreat_core(partition: &CmppPartition) -> Result<DecomposeResult> {
    let ell = partition.config().ell();
    let mut current = partition.clone();
    let mut heights = relative_heights_unchecked(&current)?;
    let profile = height_profile(&heights);
    let mut components = Vec::with_capacity(ell);
    for s in 0..ell {
        let mut comp = Vec::with_capacity(profile.n(s + 1));
        for k in 0..profile.n(s + 1) {
            let mut idx = heights.indices_with(s)[k];
            let mut count = 0;
            while let Some(out) = step(&current, &heights, idx, Direction::Backward)? {
                current = out.partition;
                heights = out.assignment;
                idx = out.tracked;
                if out.weight_delta != 0 {
                    count += 1;
                }
            }
            comp.push(count);
        }
        components.push(comp);
    }
    let vector = VectorPartition::new(components)
        .map_err(|e| CmppError::Invariant(format!("retreat produced a decreasing component: {e}")))?;
    Ok(DecomposeResult {
        profile,
        base: current,
        vector,
    })
}

/// Moves every part as far back as possible, smallest height class first and
/// smallest part first within a class.
pub fn retreat(partition: &CmppPartition) -> Result<DecomposeResult> {
    let i = require_admissible(partition)?;
    let config = partition.config();
    let result = retreat_core(partition)?;
    let expected = base_weight(family_of(config.variant()), config.ell(), i, &result.profile)?;
    if result.base.weight() != expected || !result.weight_check(partition.weight()) {
        return Err(CmppError::Invariant(format!(
            "retreat of {partition} reached {} of weight {}, expected base weight {expected}",
            result.base,
            result.base.weight()
        )));
    }
    Ok(result)
}

/// Inverse of [`retreat`]: largest height class first, the `k`-th largest part
/// of a class moving forward by the `k`-th largest count.
pub fn advance(base: &CmppPartition, vector: &VectorPartition) -> Result<CmppPartition> {
    require_admissible(base)?;
    let ell = base.config().ell();
    let mut current = base.clone();
    let mut heights = relative_heights_unchecked(&current)?;
    let profile = height_profile(&heights);
    if vector.shape() != profile {
        return Err(CmppError::Usage(format!(
            "vector shape {} does not match profile {profile}",
            vector.shape()
        )));
    }
    for s in (0..ell).rev() {
        let comp = &vector.components()[s];
        let n = comp.len();
        for k in 0..n {
            let mut class = heights.indices_with(s);
            class.reverse();
            let mut idx = class[k];
            for _ in 0..comp[n - 1 - k] {
                match step(&current, &heights, idx, Direction::Forward)? {
                    Some(out) => {
                        current = out.partition;
                        heights = out.assignment;
                        idx = out.tracked;
                    }
                    None => {
                        return Err(CmppError::Invariant(format!(
                            "forward move of part {} blocked in {current}",
                            current.parts()[idx]
                        )))
                    }
                }
            }
        }
    }
    Ok(current)
}

pub fn base_weight(family: LinearFamily, ell: usize, i: usize, profile: &HeightProfile) -> Result<usize> {
    if profile.ell() != ell {
        return Err(CmppError::Usage(format!(
            "profile {profile} has length {}, expected {ell}",
            profile.ell()
        )));
    }
    Ok(profile.quadratic() + linear_form(family, ell, i, &profile.big_n())?)
}

/// Far-apart parts at absolute height equal to their target relative height.
fn spread_witness(config: &DiagramConfig, profile: &HeightProfile) -> Result<CmppPartition> {
    let ell = config.ell();
    let gap = 2 * ell * (profile.total_parts() + ell + 2);
    let mut parts = Vec::new();
    let mut m = 0;
    for a in 0..ell {
        for _ in 0..profile.n(a + 1) {
            m += gap;
            let part = [Part::new(m, a), Part::new(m + 1, a)]
                .into_iter()
                .find(|&p| config.part_is_valid(p))
                .ok_or_else(|| CmppError::Domain(format!("no cell for height {a} near {m}")))?;
            m = part.magnitude;
            parts.push(part);
        }
    }
    CmppPartition::new(config.clone(), parts)
}

/// The partition with the given relative-height profile that admits no backward move.
pub fn base_partition(config: &DiagramConfig, profile: &HeightProfile) -> Result<CmppPartition> {
    let i = config.require_single()?;
    if profile.ell() != config.ell() {
        return Err(CmppError::Usage(format!(
            "profile {profile} has length {}, expected {}",
            profile.ell(),
            config.ell()
        )));
    }
    let witness = spread_witness(config, profile)?;
    let result = retreat_core(&witness)?;
    if result.profile != *profile {
        return Err(CmppError::Invariant(format!(
            "spread witness {witness} has profile {}, wanted {profile}",
            result.profile
        )));
    }
    let expected = base_weight(family_of(config.variant()), config.ell(), i, profile)?;
    if result.base.weight() != expected {
        return Err(CmppError::Invariant(format!(
            "base {} has weight {}, expected {expected}",
            result.base,
            result.base.weight()
        )));
    }
    Ok(result.base)
}
