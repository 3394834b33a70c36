//! Diagram geometry, admissibility and brute-force enumeration.
//!
//! Rows run `1..=2l` from top to bottom. A part `(m, a)` occupies one cell; `a`
//! is its absolute height, the number of same-magnitude cells below it. On the
//! standard grid odd magnitudes live on odd rows; the reflected geometry (used
//! by `StarStar` and `Reflected`) swaps the row parities and the initial-condition
//! order.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CmppError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Standard,
    /// Standard grid without the positive cells of row 1.
    Star,
    /// Reflected grid without the positive cells of row 1.
    StarStar,
    Reflected,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Standard,
        Variant::Star,
        Variant::StarStar,
        Variant::Reflected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Star => "star",
            Variant::StarStar => "star_star",
            Variant::Reflected => "reflected",
        }
    }

    fn reflected_geometry(self) -> bool {
        matches!(self, Variant::StarStar | Variant::Reflected)
    }

    /// Whether `row` carries odd magnitudes.
    pub fn row_holds_odd(self, row: usize) -> bool {
        (row % 2 == 1) != self.reflected_geometry()
    }

    /// Row of the cell for magnitude `m` at absolute height `a`.
    pub fn row_of(self, ell: usize, m: usize, a: usize) -> usize {
        let odd = m % 2 == 1;
        match (self.reflected_geometry(), odd) {
            (false, true) => 2 * (ell - a) - 1,
            (false, false) => 2 * (ell - a),
            (true, true) => 2 * (ell - a),
            (true, false) => 2 * (ell - a) - 1,
        }
    }

    /// Positive-magnitude cells removed from the grid.
    pub fn is_deleted(self, row: usize, m: i64) -> bool {
        row == 1
            && m >= 1
            && match self {
                Variant::Star => m % 2 == 1,
                Variant::StarStar => m % 2 == 0,
                _ => false,
            }
    }

    /// Cell of the initial condition `k_j`.
    pub fn initial_cell(self, ell: usize, j: usize) -> CellAddress {
        match (self.reflected_geometry(), j) {
            (false, 0) => CellAddress::new(2 * ell, 0),
            (false, j) => CellAddress::new(2 * (ell - j + 1) - 1, -1),
            (true, 0) => CellAddress::new(1, 0),
            (true, j) => CellAddress::new(2 * j, -1),
        }
    }

    /// Absolute height of the part sitting at `(row, m)`, if such a part exists.
    pub fn height_at(self, ell: usize, row: usize, m: i64) -> Option<usize> {
        if m < 1 || row == 0 || row > 2 * ell || self.is_deleted(row, m) {
            return None;
        }
        (0..ell).find(|&a| self.row_of(ell, m as usize, a) == row)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = CmppError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "main" => Ok(Variant::Standard),
            "star" => Ok(Variant::Star),
            "star_star" | "starstar" => Ok(Variant::StarStar),
            "reflected" => Ok(Variant::Reflected),
            other => Err(CmppError::Usage(format!("unknown variant '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellAddress {
    pub row: usize,
    pub magnitude: i64,
}

impl CellAddress {
    pub fn new(row: usize, magnitude: i64) -> Self {
        CellAddress { row, magnitude }
    }

    /// Two cells lie on a common downward path.
    pub fn conflicts_with(&self, other: &CellAddress) -> bool {
        let dm = (self.magnitude - other.magnitude).abs();
        let dr = (self.row as i64 - other.row as i64).abs();
        if dr == 0 {
            dm == 0
        } else {
            dm <= dr
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramConfig {
    ell: usize,
    k: Vec<usize>,
    variant: Variant,
}

impl DiagramConfig {
    pub fn new(ell: usize, k: Vec<usize>, variant: Variant) -> Result<Self> {
        if ell == 0 {
            return Err(CmppError::Domain("ell must be positive".into()));
        }
        if k.len() != ell + 1 {
            return Err(CmppError::Usage(format!(
                "expected {} initial conditions, got {}",
                ell + 1,
                k.len()
            )));
        }
        if k.iter().sum::<usize>() == 0 {
            return Err(CmppError::Domain("initial conditions must sum to at least 1".into()));
        }
        Ok(DiagramConfig { ell, k, variant })
    }

    /// `k_i = 1` and every other initial condition 0.
    pub fn single(ell: usize, i: usize, variant: Variant) -> Result<Self> {
        if i > ell {
            return Err(CmppError::OutOfRange(format!("i = {i} not in 0..={ell}")));
        }
        let mut k = vec![0; ell + 1];
        k[i] = 1;
        Self::new(ell, k, variant)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k_vec(&self) -> &[usize] {
        &self.k
    }

    pub fn k(&self) -> usize {
        self.k.iter().sum()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rows(&self) -> usize {
        2 * self.ell
    }

    /// The index `i` when exactly one `k_i` is 1 and the rest 0.
    pub fn single_index(&self) -> Option<usize> {
        if self.k() != 1 {
            return None;
        }
        self.k.iter().position(|&x| x == 1)
    }

    pub fn require_single(&self) -> Result<usize> {
        self.single_index().ok_or_else(|| {
            CmppError::Unsupported(format!(
                "needs exactly one initial condition equal to 1, got {:?}",
                self.k
            ))
        })
    }

    /// Cells holding the positive initial conditions, with their values.
    pub fn initial_cells(&self) -> Vec<(CellAddress, usize)> {
        self.k
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(j, &v)| (self.variant.initial_cell(self.ell, j), v))
            .collect()
    }

    pub fn part_is_valid(&self, part: Part) -> bool {
        part.magnitude >= 1
            && part.absolute_height < self.ell
            && !self.variant.is_deleted(
                self.variant.row_of(self.ell, part.magnitude, part.absolute_height),
                part.magnitude as i64,
            )
    }

    /// Parts available at magnitude `m`, highest absolute height first.
    pub fn parts_at_magnitude(&self, m: usize) -> Vec<Part> {
        (0..self.ell)
            .rev()
            .map(|a| Part::new(m, a))
            .filter(|p| self.part_is_valid(*p))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    pub magnitude: usize,
    pub absolute_height: usize,
}

impl Part {
    pub fn new(magnitude: usize, absolute_height: usize) -> Self {
        Part {
            magnitude,
            absolute_height,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.magnitude, self.absolute_height)
    }
}

pub fn cell_of(config: &DiagramConfig, part: Part) -> Result<CellAddress> {
    if !config.part_is_valid(part) {
        return Err(CmppError::Domain(format!(
            "part {part} has no cell in the {} grid with l = {}",
            config.variant, config.ell
        )));
    }
    let row = config
        .variant
        .row_of(config.ell, part.magnitude, part.absolute_height);
    Ok(CellAddress::new(row, part.magnitude as i64))
}

/// Parts of a partition sorted by magnitude, higher cells first on ties.
fn canonical_order(parts: &mut [Part]) {
    parts.sort_by(|x, y| {
        x.magnitude
            .cmp(&y.magnitude)
            .then(y.absolute_height.cmp(&x.absolute_height))
    });
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmppPartition {
    config: DiagramConfig,
    parts: Vec<Part>,
}

impl CmppPartition {
    /// Validates cells and admissibility.
    pub fn new(config: DiagramConfig, mut parts: Vec<Part>) -> Result<Self> {
        for &p in &parts {
            cell_of(&config, p)?;
        }
        canonical_order(&mut parts);
        let partition = CmppPartition { config, parts };
        if !is_admissible(&partition) {
            return Err(CmppError::Domain(format!(
                "partition {partition} is not admissible"
            )));
        }
        Ok(partition)
    }

    /// Skips the admissibility check; cells must still be valid.
    pub fn new_unchecked(config: DiagramConfig, mut parts: Vec<Part>) -> Self {
        canonical_order(&mut parts);
        CmppPartition { config, parts }
    }

    pub fn empty(config: DiagramConfig) -> Self {
        CmppPartition {
            config,
            parts: Vec::new(),
        }
    }

    pub fn config(&self) -> &DiagramConfig {
        &self.config
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn magnitudes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.magnitude).collect()
    }

    pub fn absolute_heights(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.absolute_height).collect()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|p| p.magnitude).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn cells(&self) -> Vec<CellAddress> {
        self.parts
            .iter()
            .map(|&p| cell_of(&self.config, p).expect("parts validated on construction"))
            .collect()
    }

    pub fn frequency_grid(&self) -> FrequencyGrid {
        FrequencyGrid::from_partition(self)
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson {
            ell: self.config.ell,
            k: self.config.k.clone(),
            variant: self.config.variant,
            parts: self.parts.clone(),
        }
    }

    pub fn from_json(json: &PartitionJson) -> Result<Self> {
        let config = DiagramConfig::new(json.ell, json.k.clone(), json.variant)?;
        Self::new(config, json.parts.clone())
    }
}

impl fmt::Display for CmppPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub ell: usize,
    pub k: Vec<usize>,
    pub variant: Variant,
    pub parts: Vec<Part>,
}

/// Cell values: part multiplicities plus the initial conditions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrequencyGrid {
    values: HashMap<CellAddress, usize>,
}

impl FrequencyGrid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_partition(partition: &CmppPartition) -> Self {
        let mut grid = FrequencyGrid::new();
        for (cell, v) in partition.config.initial_cells() {
            grid.add(cell, v);
        }
        for cell in partition.cells() {
            grid.add(cell, 1);
        }
        grid
    }

    pub fn add(&mut self, cell: CellAddress, value: usize) {
        *self.values.entry(cell).or_insert(0) += value;
    }

    pub fn get(&self, cell: CellAddress) -> usize {
        self.values.get(&cell).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CellAddress, &usize)> {
        self.values.iter()
    }

    pub fn max_magnitude(&self) -> i64 {
        self.values.keys().map(|c| c.magnitude).max().unwrap_or(0)
    }

    /// `sum m * f` over positive-magnitude cells.
    pub fn weight(&self) -> usize {
        self.values
            .iter()
            .filter(|(c, _)| c.magnitude > 0)
            .map(|(c, v)| c.magnitude as usize * v)
            .sum()
    }

    /// `sum f` over positive-magnitude cells.
    pub fn length(&self) -> usize {
        self.values
            .iter()
            .filter(|(c, _)| c.magnitude > 0)
            .map(|(_, v)| v)
            .sum()
    }
}

/// Largest value sum along a downward path through rows `1..=2l`.
///
/// Paths step the magnitude by exactly 1 per row and stay inside
/// `[-1, max + 2l]`; cells of the wrong parity for a row do not exist.
pub fn max_downward_path_sum(config: &DiagramConfig, grid: &FrequencyGrid) -> usize {
    let rows = config.rows();
    let hi = grid.max_magnitude().max(0) + rows as i64;
    let width = (hi + 2) as usize;
    let idx = |m: i64| (m + 1) as usize;
    let exists = |row: usize, m: i64| (m.rem_euclid(2) == 1) == config.variant.row_holds_odd(row);
    let mut best: Vec<Option<usize>> = vec![None; width];
    for row in 1..=rows {
        let mut next = vec![None; width];
        for m in -1..=hi {
            if !exists(row, m) {
                continue;
            }
            let v = grid.get(CellAddress::new(row, m));
            let prev = if row == 1 {
                Some(0)
            } else {
                let left = if m > -1 { best[idx(m - 1)] } else { None };
                let right = if m < hi { best[idx(m + 1)] } else { None };
                left.max(right)
            };
            next[idx(m)] = prev.map(|p| p + v);
        }
        best = next;
    }
    best.into_iter().flatten().max().unwrap_or(0)
}

/// Pairwise rule for `k = 1`: no two positive cells share a downward path.
pub fn pairwise_admissible(config: &DiagramConfig, partition: &CmppPartition) -> bool {
    let mut cells: Vec<CellAddress> = config.initial_cells().into_iter().map(|(c, _)| c).collect();
    cells.extend(partition.cells());
    for (x, a) in cells.iter().enumerate() {
        for b in &cells[..x] {
            if a.conflicts_with(b) {
                return false;
            }
        }
    }
    true
}

pub fn is_admissible(partition: &CmppPartition) -> bool {
    let config = &partition.config;
    let by_dp = max_downward_path_sum(config, &partition.frequency_grid()) <= config.k();
    if config.k() == 1 {
        debug_assert_eq!(by_dp, pairwise_admissible(config, partition));
    }
    by_dp
}

/// Counts indexed by part count `j` and weight `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    table: Vec<Vec<u64>>,
    max_weight: usize,
}

impl Counts {
    pub fn new(max_weight: usize) -> Self {
        Counts {
            table: vec![vec![0; max_weight + 1]; max_weight + 2],
            max_weight,
        }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn record(&mut self, j: usize, n: usize) {
        self.table[j][n] += 1;
    }

    pub fn get(&self, j: usize, n: usize) -> u64 {
        self.table
            .get(j)
            .and_then(|row| row.get(n))
            .copied()
            .unwrap_or(0)
    }

    /// Totals by weight.
    pub fn totals(&self) -> Vec<u64> {
        (0..=self.max_weight)
            .map(|n| self.table.iter().map(|row| row[n]).sum())
            .collect()
    }

    pub fn merge(&mut self, other: &Counts) {
        assert_eq!(self.max_weight, other.max_weight);
        for (a, b) in self.table.iter_mut().zip(&other.table) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }

    /// Non-zero `(j, n, count)` triples ordered by `(j, n)`.
    pub fn entries(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (j, row) in self.table.iter().enumerate() {
            for (n, &c) in row.iter().enumerate() {
                if c > 0 {
                    out.push((j, n, c));
                }
            }
        }
        out
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["j", "n", "count"])?;
        for (j, n, c) in self.entries() {
            w.write_record([j.to_string(), n.to_string(), c.to_string()])?;
        }
        w.flush()
    }
}

struct Search<'a, F: FnMut(&[Part])> {
    config: &'a DiagramConfig,
    candidates: Vec<(Part, CellAddress)>,
    initial: Vec<CellAddress>,
    max_weight: usize,
    max_parts: usize,
    visit: F,
}

impl<F: FnMut(&[Part])> Search<'_, F> {
    fn run_single(&mut self, start: usize, chosen: &mut Vec<(Part, CellAddress)>, weight: usize) {
        let parts: Vec<Part> = chosen.iter().map(|(p, _)| *p).collect();
        (self.visit)(&parts);
        if chosen.len() >= self.max_parts {
            return;
        }
        for idx in start..self.candidates.len() {
            let (part, cell) = self.candidates[idx];
            if weight + part.magnitude > self.max_weight {
                break;
            }
            if self.initial.iter().any(|c| c.conflicts_with(&cell))
                || chosen.iter().any(|(_, c)| c.conflicts_with(&cell))
            {
                continue;
            }
            chosen.push((part, cell));
            self.run_single(idx + 1, chosen, weight + part.magnitude);
            chosen.pop();
        }
    }

    fn run_general(&mut self, start: usize, chosen: &mut Vec<Part>, weight: usize) {
        (self.visit)(chosen);
        if chosen.len() >= self.max_parts {
            return;
        }
        for idx in start..self.candidates.len() {
            let (part, _) = self.candidates[idx];
            if weight + part.magnitude > self.max_weight {
                break;
            }
            chosen.push(part);
            let trial = CmppPartition::new_unchecked(self.config.clone(), chosen.clone());
            if is_admissible(&trial) {
                // Same index again: multiplicities above 1 are allowed for k > 1.
                self.run_general(idx, chosen, weight + part.magnitude);
            }
            chosen.pop();
        }
    }
}

/// Bounds on an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_weight: usize,
    pub max_part: Option<usize>,
    pub max_parts: Option<usize>,
}

impl Limits {
    pub fn weight(max_weight: usize) -> Self {
        Limits {
            max_weight,
            max_part: None,
            max_parts: None,
        }
    }
}

/// Visits every admissible partition of weight at most `max_weight` (parts at
/// most `max_part` if given) in a fixed depth-first order: magnitudes ascending,
/// higher cells first at equal magnitude.
pub fn for_each_admissible<F: FnMut(&[Part])>(
    config: &DiagramConfig,
    max_weight: usize,
    max_part: Option<usize>,
    visit: F,
) {
    let limits = Limits {
        max_part,
        ..Limits::weight(max_weight)
    };
    for_each_within(config, limits, visit)
}

/// As [`for_each_admissible`], optionally also capping the number of parts.
pub fn for_each_within<F: FnMut(&[Part])>(config: &DiagramConfig, limits: Limits, visit: F) {
    let max_weight = limits.max_weight;
    let top = limits.max_part.unwrap_or(max_weight).min(max_weight);
    let candidates = (1..=top)
        .flat_map(|m| config.parts_at_magnitude(m))
        .map(|p| (p, cell_of(config, p).expect("valid by construction")))
        .collect();
    let mut search = Search {
        config,
        candidates,
        initial: config.initial_cells().into_iter().map(|(c, _)| c).collect(),
        max_weight,
        max_parts: limits.max_parts.unwrap_or(usize::MAX),
        visit,
    };
    if config.k() == 1 {
        search.run_single(0, &mut Vec::new(), 0);
    } else {
        search.run_general(0, &mut Vec::new(), 0);
    }
}

/// Counts `F(j, n)` of admissible partitions by part count and weight.
pub fn enumerate_admissible(config: &DiagramConfig, max_weight: usize, max_part: Option<usize>) -> Counts {
    let mut counts = Counts::new(max_weight);
    for_each_admissible(config, max_weight, max_part, |parts| {
        counts.record(parts.len(), parts.iter().map(|p| p.magnitude).sum());
    });
    counts
}

/// All admissible partitions up to `max_weight`, in stream order.
pub fn admissible_partitions(config: &DiagramConfig, max_weight: usize) -> Vec<CmppPartition> {
    let mut out = Vec::new();
    for_each_admissible(config, max_weight, None, |parts| {
        out.push(CmppPartition::new_unchecked(config.clone(), parts.to_vec()));
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrequencyCondition {
    /// `f_j + f_{j+1} <= k` and `f_1 <= a - 1`.
    Rrg,
    /// As `Rrg`, and `j f_j + (j+1) f_{j+1} = a - 1 (mod 2)` whenever
    /// `f_j + f_{j+1} = k`.
    Bressoud,
}

/// Counts of ordinary partitions by part count and weight under a frequency condition.
pub fn frequency_condition_counts(
    kind: FrequencyCondition,
    k: usize,
    a: usize,
    max_weight: usize,
) -> Result<Counts> {
    if a == 0 || a > k + 1 {
        return Err(CmppError::OutOfRange(format!("a = {a} not in 1..={}", k + 1)));
    }
    let parity = (a - 1) % 2;
    let pair_ok = |j: usize, fj: usize, fj1: usize| -> bool {
        if fj + fj1 > k {
            return false;
        }
        !(kind == FrequencyCondition::Bressoud && fj + fj1 == k && (j * fj + (j + 1) * fj1) % 2 != parity)
    };
    let mut counts = Counts::new(max_weight);
    // Assign f_j for j = 1, 2, ... while weight remains.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        rem: usize,
        prev: usize,
        parts: usize,
        total: usize,
        a: usize,
        pair_ok: &dyn Fn(usize, usize, usize) -> bool,
        counts: &mut Counts,
    ) {
        if rem == 0 {
            if j == 1 || pair_ok(j - 1, prev, 0) {
                counts.record(parts, total);
            }
            return;
        }
        if j > rem {
            return;
        }
        for f in 0..=rem / j {
            if j == 1 && f > a - 1 {
                break;
            }
            if j > 1 && !pair_ok(j - 1, prev, f) {
                continue;
            }
            rec(j + 1, rem - j * f, f, parts + f, total, a, pair_ok, counts);
        }
    }
    for n in 0..=max_weight {
        rec(1, n, 0, 0, n, a, &pair_ok, &mut counts);
    }
    Ok(counts)
}

/// Reflected-grid counts equal standard-grid counts for `k_i = 1`.
pub fn reflect_counts_check(ell: usize, i: usize, max_weight: usize) -> Result<bool> {
    let standard = DiagramConfig::single(ell, i, Variant::Standard)?;
    let reflected = DiagramConfig::single(ell, i, Variant::Reflected)?;
    Ok(enumerate_admissible(&standard, max_weight, None)
        == enumerate_admissible(&reflected, max_weight, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(ell: usize, k: &[usize], v: Variant) -> DiagramConfig {
        DiagramConfig::new(ell, k.to_vec(), v).unwrap()
    }

    fn parts(spec: &[(usize, usize)]) -> Vec<Part> {
        spec.iter().map(|&(m, a)| Part::new(m, a)).collect()
    }

    #[test]
    fn cell_examples() {
        let c = cfg(3, &[0, 0, 0, 1], Variant::Standard);
        assert_eq!(cell_of(&c, Part::new(3, 0)).unwrap().row, 5);
        assert_eq!(cell_of(&c, Part::new(23, 2)).unwrap().row, 1);
        let star = cfg(3, &[0, 0, 0, 1], Variant::Star);
        assert!(cell_of(&star, Part::new(3, 2)).is_err());
        assert!(cell_of(&star, Part::new(4, 2)).is_ok());
        let ss = cfg(3, &[1, 0, 0, 0], Variant::StarStar);
        assert!(cell_of(&ss, Part::new(4, 2)).is_err());
        assert_eq!(cell_of(&ss, Part::new(3, 2)).unwrap().row, 2);
    }

    #[test]
    fn path_sum_examples() {
        let empty = CmppPartition::empty(cfg(3, &[0, 0, 0, 1], Variant::Standard));
        assert_eq!(max_downward_path_sum(empty.config(), &empty.frequency_grid()), 1);
        let p = CmppPartition::new_unchecked(cfg(1, &[1, 0], Variant::Standard), parts(&[(1, 0)]));
        assert_eq!(max_downward_path_sum(p.config(), &p.frequency_grid()), 2);
        assert!(!is_admissible(&p));
    }

    #[test]
    fn intro_example_on_standard_grid() {
        let c = cfg(3, &[0, 0, 0, 1], Variant::Standard);
        let p = CmppPartition::new(
            c,
            parts(&[(2, 2), (5, 2), (12, 2), (16, 2), (18, 2), (23, 0)]),
        )
        .unwrap();
        assert_eq!(max_downward_path_sum(p.config(), &p.frequency_grid()), 1);
    }

    #[test]
    fn intro_example_literal_on_reflected_grid() {
        let c = cfg(3, &[0, 1, 0, 0], Variant::Reflected);
        let p = CmppPartition::new_unchecked(
            c,
            parts(&[(2, 1), (5, 2), (12, 2), (16, 2), (18, 2), (23, 1)]),
        );
        assert!(is_admissible(&p));
        assert!(pairwise_admissible(p.config(), &p));
    }

    #[test]
    fn k0_examples() {
        let c = cfg(3, &[1, 0, 0, 0], Variant::Standard);
        assert!(CmppPartition::new(c.clone(), parts(&[(2, 0)])).is_ok());
        assert!(CmppPartition::new(c, parts(&[(2, 1)])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let c = cfg(1, &[0, 1], Variant::Standard);
        let counts = enumerate_admissible(&c, 6, None);
        assert_eq!(counts.totals(), vec![1, 1, 1, 1, 2, 2, 3]);
        for ell in 1..=3 {
            for i in 0..=ell {
                let c = DiagramConfig::single(ell, i, Variant::Standard).unwrap();
                assert_eq!(enumerate_admissible(&c, 0, None).totals(), vec![1]);
            }
        }
    }

    #[test]
    fn enumeration_respects_max_part() {
        let c = cfg(1, &[0, 1], Variant::Standard);
        let all = enumerate_admissible(&c, 12, None);
        let bounded = enumerate_admissible(&c, 12, Some(3));
        assert!(bounded.totals().iter().zip(all.totals()).all(|(b, a)| *b <= a));
        assert_eq!(bounded.totals()[4], 1);
    }

    #[test]
    fn stream_order_is_canonical() {
        let c = DiagramConfig::single(2, 0, Variant::Standard).unwrap();
        let mut seen = Vec::new();
        for_each_admissible(&c, 4, None, |p| seen.push(p.to_vec()));
        assert_eq!(seen[0], Vec::<Part>::new());
        assert_eq!(seen[1], vec![Part::new(2, 0)]);
    }

    #[test]
    fn star_has_no_odd_top_parts() {
        let c = DiagramConfig::single(3, 1, Variant::Star).unwrap();
        for_each_admissible(&c, 14, None, |ps| {
            assert!(ps.iter().all(|p| !(p.magnitude % 2 == 1 && p.absolute_height == 2)));
        });
        let c = DiagramConfig::single(3, 1, Variant::StarStar).unwrap();
        for_each_admissible(&c, 14, None, |ps| {
            assert!(ps.iter().all(|p| !(p.magnitude % 2 == 0 && p.absolute_height == 2)));
        });
    }

    #[test]
    fn frequency_examples() {
        let c = frequency_condition_counts(FrequencyCondition::Rrg, 1, 2, 4).unwrap();
        assert_eq!(c.totals()[4], 2);
        let z = frequency_condition_counts(FrequencyCondition::Rrg, 2, 1, 0).unwrap();
        assert_eq!(z.totals(), vec![1]);
        assert!(frequency_condition_counts(FrequencyCondition::Rrg, 2, 4, 3).is_err());
    }

    #[test]
    fn reflection_examples() {
        assert!(reflect_counts_check(1, 0, 10).unwrap());
        assert!(reflect_counts_check(2, 1, 0).unwrap());
    }

    #[test]
    fn grid_weight_and_length() {
        let c = DiagramConfig::single(2, 1, Variant::Standard).unwrap();
        for p in admissible_partitions(&c, 12) {
            let g = p.frequency_grid();
            assert_eq!(g.weight(), p.weight());
            assert_eq!(g.length(), p.len());
        }
    }

    #[test]
    fn json_round_trip() {
        let c = cfg(3, &[0, 0, 1, 0], Variant::Standard);
        let p = CmppPartition::new(c, parts(&[(3, 0), (7, 1)])).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"ell":3,"k":[0,0,1,0],"variant":"standard","parts":[{"magnitude":3,"absolute_height":0},{"magnitude":7,"absolute_height":1}]}"#
        );
        let back: PartitionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CmppPartition::from_json(&back).unwrap(), p);
    }
}
