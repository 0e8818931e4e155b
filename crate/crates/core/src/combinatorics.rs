//! Partitions, Young tableaux on arbitrary letter sets, standard-tableau
//! enumeration and the hook length formula.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_1, the length of the first row (= number of columns).
    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Column heights, left to right.
    pub fn conjugate(&self) -> Vec<usize> {
        (0..self.first()).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect()
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj[j] - i - 1) + 1).collect())
            .collect()
    }

    /// Comma-separated form accepted by [`FromStr`].
    pub fn to_arg(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_arg())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n)` first,
/// `(1,…,1)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::EmptyInput("partitions of 0"));
    }
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A bijective filling of a Young diagram by a set of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(shape).map_err(|e| Error::Shape(e.to_string()))?;
        let mut letters: Vec<u32> = rows.iter().flatten().copied().collect();
        if letters.contains(&0) {
            return Err(Error::Shape("letters must be positive".into()));
        }
        letters.sort_unstable();
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Shape("letters must be distinct".into()));
        }
        Ok(YoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len()).collect() }
    }

    /// Letters in increasing order.
    pub fn letters(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.rows.iter().flatten().copied().collect();
        l.sort_unstable();
        l
    }

    pub fn max_letter(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Entries of column `j` (1-based), top to bottom.
    pub fn column_entries(&self, j: usize) -> Result<Vec<u32>> {
        let width = self.rows[0].len();
        if j == 0 || j > width {
            return Err(Error::OutOfRange { index: j, max: width });
        }
        Ok(self.rows.iter().take_while(|r| r.len() >= j).map(|r| r[j - 1]).collect())
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (1..=self.rows[0].len()).map(|j| self.column_entries(j).expect("in range")).collect()
    }

    /// Rows concatenated top to bottom; the key for the canonical order.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Applies a letter map to every cell.
    pub fn relabel(&self, mut map: impl FnMut(u32) -> u32) -> Result<Self> {
        YoungTableau::new(self.rows.iter().map(|r| r.iter().map(|&x| map(x)).collect()).collect())
    }
}

impl TryFrom<Vec<Vec<u32>>> for YoungTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        YoungTableau::new(rows)
    }
}

impl From<YoungTableau> for Vec<Vec<u32>> {
    fn from(t: YoungTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

fn normalize_letters(shape: &Partition, letters: &[u32]) -> Result<Vec<u32>> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != letters.len() || sorted.first() == Some(&0) {
        return Err(Error::Shape("letters must be distinct positive integers".into()));
    }
    if sorted.len() != shape.n() {
        return Err(Error::Shape(format!("{} letters for a shape of size {}", sorted.len(), shape.n())));
    }
    Ok(sorted)
}

/// Standard tableaux of `shape` filled with `letters`, sorted by
/// [`YoungTableau::reading_word`].
pub fn enumerate_standard_tableaux(shape: &Partition, letters: &[u32]) -> Result<Vec<YoungTableau>> {
    let letters = normalize_letters(shape, letters)?;
    let parts = shape.parts().to_vec();

    // place letters in increasing order; each goes into an addable corner
    fn rec(k: usize, letters: &[u32], parts: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<YoungTableau>) {
        if k == letters.len() {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        for i in 0..parts.len() {
            let len = rows[i].len();
            let fits_row = len < parts[i];
            let fits_col = i == 0 || rows[i - 1].len() > len;
            if fits_row && fits_col {
                rows[i].push(letters[k]);
                rec(k + 1, letters, parts, rows, out);
                rows[i].pop();
            }
        }
    }

    let mut rows = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    rec(0, &letters, &parts, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    Ok(out)
}

/// `[n] = {1, …, n}`.
pub fn standard_letters(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

/// Tableaux with increasing columns whose equal-height columns appear in
/// increasing order of their top entry. Every tableau of the shape agrees
/// with exactly one of these up to permuting entries inside columns and
/// permuting columns of equal height.
pub fn enumerate_column_normalized_tableaux(shape: &Partition, letters: &[u32]) -> Result<Vec<YoungTableau>> {
    let letters = normalize_letters(shape, letters)?;
    let heights = shape.conjugate();

    // choose column sets left to right; within a run of equal heights the
    // top entries must increase
    fn rec(
        col: usize,
        heights: &[usize],
        unused: &mut Vec<u32>,
        min_top: u32,
        cols: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if col == heights.len() {
            out.push(cols.clone());
            return;
        }
        let h = heights[col];
        let same_as_prev = col > 0 && heights[col - 1] == h;
        let lower = if same_as_prev { min_top } else { 0 };
        let candidates: Vec<u32> = unused.clone();
        for subset in k_subsets(&candidates, h) {
            if subset[0] <= lower && same_as_prev {
                continue;
            }
            unused.retain(|x| !subset.contains(x));
            cols.push(subset.clone());
            rec(col + 1, heights, unused, subset[0], cols, out);
            cols.pop();
            unused.extend(subset.iter().copied());
            unused.sort_unstable();
        }
    }

    let mut unused = letters.clone();
    let mut out_cols = Vec::new();
    rec(0, &heights, &mut unused, 0, &mut Vec::new(), &mut out_cols);

    let mut out: Vec<YoungTableau> = out_cols
        .into_iter()
        .map(|cols| {
            let rows = (0..shape.len())
                .map(|i| cols.iter().take_while(|c| c.len() > i).map(|c| c[i]).collect())
                .collect();
            YoungTableau { rows }
        })
        .collect();
    out.sort_by_key(|t| t.reading_word());
    Ok(out)
}

/// All `k`-element subsets of a sorted slice, each sorted, in lexicographic
/// order.
pub fn k_subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(start: usize, items: &[u32], k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(i + 1, items, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        rec(0, items, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `n! / ∏ hook lengths`.
pub fn count_syt_hook(shape: &Partition) -> BigUint {
    let n = shape.n();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for h in shape.hook_lengths().into_iter().flatten() {
        den *= h;
    }
    num / den
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn displayed_tableau() -> YoungTableau {
        YoungTableau::new(vec![vec![3, 5, 1, 7], vec![6, 2], vec![4]]).unwrap()
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        let four: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|x| x.to_arg()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(7).unwrap().len(), 15);
        assert_eq!(enumerate_partitions(0), Err(Error::EmptyInput("partitions of 0")));
    }

    /// Brute-force partition count: compositions filtered to be decreasing.
    fn brute_partition_count(n: usize) -> usize {
        (0u32..(1 << (n - 1)))
            .filter(|mask| {
                let mut parts = Vec::new();
                let mut cur = 1;
                for i in 0..n - 1 {
                    if mask & (1 << i) != 0 {
                        parts.push(cur);
                        cur = 1;
                    } else {
                        cur += 1;
                    }
                }
                parts.push(cur);
                parts.windows(2).all(|w| w[0] >= w[1])
            })
            .count()
    }

    #[test]
    fn partition_counts_match_brute_force() {
        for n in 1..=10 {
            let all = enumerate_partitions(n).unwrap();
            assert_eq!(all.len(), brute_partition_count(n));
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn invalid_partitions() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!(p("(3,2,1)").n(), 6);
    }

    #[test]
    fn column_entries_of_displayed_tableau() {
        let t = displayed_tableau();
        assert_eq!(t.column_entries(1).unwrap(), vec![3, 6, 4]);
        assert_eq!(t.column_entries(3).unwrap(), vec![1]);
        assert_eq!(t.column_entries(5), Err(Error::OutOfRange { index: 5, max: 4 }));
        assert_eq!(t.column_entries(0), Err(Error::OutOfRange { index: 0, max: 4 }));
        let row = YoungTableau::new(vec![vec![2, 1, 3]]).unwrap();
        for j in 1..=3 {
            assert_eq!(row.column_entries(j).unwrap().len(), 1);
        }
        assert!(!t.is_standard());
    }

    #[test]
    fn tableau_json_is_list_of_rows() {
        let t = displayed_tableau();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, "[[3,5,1,7],[6,2],[4]]");
        let back: YoungTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<YoungTableau>("[[1],[2,3]]").is_err());
        assert!(serde_json::from_str::<YoungTableau>("[[1,1]]").is_err());
    }

    #[test]
    fn standard_tableaux_small_shapes() {
        let two_two = enumerate_standard_tableaux(&p("2,2"), &[1, 2, 3, 4]).unwrap();
        assert_eq!(two_two.len(), 2);
        assert_eq!(two_two[0].rows(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(two_two[1].rows(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(enumerate_standard_tableaux(&p("5"), &standard_letters(5)).unwrap().len(), 1);
        assert_eq!(enumerate_standard_tableaux(&p("2,2,1"), &standard_letters(5)).unwrap().len(), 5);
        assert!(matches!(enumerate_standard_tableaux(&p("2,2"), &[1, 2, 3]), Err(Error::Shape(_))));
    }

    #[test]
    fn hook_counts() {
        assert_eq!(count_syt_hook(&p("3,3,1")), BigUint::from(21u32));
        assert_eq!(count_syt_hook(&p("3,2")), BigUint::from(5u32));
        assert_eq!(count_syt_hook(&p("6")), BigUint::from(1u32));
        for d in 1..=3u64 {
            let shape = Partition::new(vec![d as usize, d as usize, 1]).unwrap();
            assert_eq!(count_syt_hook(&shape), BigUint::from(binomial(2 * d + 1, d + 2)));
        }
    }

    /// Independent oracle: all bijective fillings, filtered by standardness.
    fn brute_force_syt(shape: &Partition) -> Vec<Vec<u32>> {
        fn perms(items: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                perms(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let mut all = Vec::new();
        perms(&mut standard_letters(shape.n()), 0, &mut all);
        let mut std: Vec<Vec<u32>> = all
            .into_iter()
            .filter(|w| {
                let mut rows = Vec::new();
                let mut at = 0;
                for &len in shape.parts() {
                    rows.push(w[at..at + len].to_vec());
                    at += len;
                }
                YoungTableau::new(rows).unwrap().is_standard()
            })
            .collect();
        std.sort();
        std
    }

    #[test]
    fn enumeration_matches_brute_force_up_to_six() {
        for n in 1..=6 {
            for shape in enumerate_partitions(n).unwrap() {
                let words: Vec<Vec<u32>> = enumerate_standard_tableaux(&shape, &standard_letters(n))
                    .unwrap()
                    .iter()
                    .map(|t| t.reading_word())
                    .collect();
                assert_eq!(words, brute_force_syt(&shape), "shape {shape}");
            }
        }
    }

    #[test]
    fn enumeration_matches_hook_formula_up_to_eight() {
        for n in 1..=8 {
            for shape in enumerate_partitions(n).unwrap() {
                let all = enumerate_standard_tableaux(&shape, &standard_letters(n)).unwrap();
                assert_eq!(BigUint::from(all.len()), count_syt_hook(&shape), "shape {shape}");
                assert!(all.iter().all(|t| t.is_standard()));
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }

    #[test]
    fn column_normalized_counts() {
        // perfect matchings of [2d]: (2d-1)!!
        assert_eq!(enumerate_column_normalized_tableaux(&p("2,2"), &standard_letters(4)).unwrap().len(), 3);
        assert_eq!(enumerate_column_normalized_tableaux(&p("3,3"), &standard_letters(6)).unwrap().len(), 15);
        // (2,1): a 2-subset for the tall column, the rest on its own
        assert_eq!(enumerate_column_normalized_tableaux(&p("2,1"), &standard_letters(3)).unwrap().len(), 3);
        let t = enumerate_column_normalized_tableaux(&p("2,2,1"), &standard_letters(5)).unwrap();
        // choose 3 for the tall column (10) times 1 ordering of the remaining pair
        assert_eq!(t.len(), 10);
    }

    #[test]
    fn k_subsets_count() {
        assert_eq!(k_subsets(&[1, 2, 3, 4, 5], 3).len(), 10);
        assert_eq!(k_subsets(&[1, 2], 3).len(), 0);
        assert_eq!(k_subsets(&[1, 2], 0), vec![Vec::<u32>::new()]);
    }

    proptest! {
        #[test]
        fn order_preserving_relabel_keeps_standardness(n in 2usize..7, seed in 0usize..1000, offsets in proptest::collection::vec(1u32..5, 7)) {
            let shapes = enumerate_partitions(n).unwrap();
            let shape = &shapes[seed % shapes.len()];
            // strictly increasing letter map
            let mut map = Vec::new();
            let mut acc = 0;
            for k in 0..n {
                acc += offsets[k];
                map.push(acc);
            }
            let base = enumerate_standard_tableaux(shape, &standard_letters(n)).unwrap();
            let relabeled: Vec<YoungTableau> =
                base.iter().map(|t| t.relabel(|x| map[x as usize - 1]).unwrap()).collect();
            let direct = enumerate_standard_tableaux(shape, &map).unwrap();
            prop_assert_eq!(relabeled, direct);
        }
    }
}
