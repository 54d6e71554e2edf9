//! Tableaux, the `delete` bumping step, KRS on bi-tableaux, and the Burge
//! variant BKRS on single d-tableaux together with its inverse.
//!
//! Tableaux are stored column-major (columns strictly increase downwards);
//! the bumping algorithms work on a row-major copy.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{LatticePoint, Monomial};

/// A tableau with strictly increasing columns and weakly decreasing column
/// lengths. It is a d-tableau when every column has even length, and
/// standard when every row weakly increases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    columns: Vec<Vec<u32>>,
}

type Rows = Vec<Vec<u32>>;

impl Tableau {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_columns(columns: Vec<Vec<u32>>) -> Result<Self> {
        for (i, col) in columns.iter().enumerate() {
            if col.is_empty() {
                return Err(Error::InvalidTableau(format!("column {} is empty", i + 1)));
            }
            if col[0] == 0 || col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "column {} is not a strictly increasing sequence of positive integers",
                    i + 1
                )));
            }
            if i > 0 && col.len() > columns[i - 1].len() {
                return Err(Error::InvalidTableau("column lengths must weakly decrease".into()));
            }
        }
        Ok(Self { columns })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[1].len() > w[0].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Self::from_columns(columns)
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn rows(&self) -> Rows {
        let height = self.length();
        (0..height)
            .map(|r| self.columns.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
            .collect()
    }

    /// Row lengths.
    pub fn shape(&self) -> Vec<usize> {
        (0..self.length())
            .map(|r| self.columns.iter().take_while(|c| c.len() > r).count())
            .collect()
    }

    /// Size of the first column.
    pub fn length(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn is_d_tableau(&self) -> bool {
        self.columns.iter().all(|c| c.len() % 2 == 0)
    }

    pub fn is_standard(&self) -> bool {
        self.columns
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(right, left)| left <= right))
    }

    /// 0-based `(row, col)` positions with no cell to the right or below.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        corners(&self.rows())
    }

    /// Applies `delete` to the corner holding `u`. When several corners hold
    /// `u`, the rightmost one is used.
    pub fn delete(&self, u: u32) -> Result<(u32, Tableau)> {
        let rows = self.rows();
        let (r, c) = corners(&rows)
            .into_iter()
            .filter(|&(r, c)| rows[r][c] == u)
            .max_by_key(|&(_, c)| c)
            .ok_or(Error::NotACorner(u))?;
        self.delete_at(r, c)
    }

    /// Applies `delete` to the corner at 0-based position `(row, col)`.
    pub fn delete_at(&self, row: usize, col: usize) -> Result<(u32, Tableau)> {
        let mut rows = self.rows();
        let v = delete_in_rows(&mut rows, row, col, None)?;
        Ok((v, Tableau::from_rows(rows)?))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for c in &self.columns {
            let body: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "{}|", body.join(","))?;
        }
        Ok(())
    }
}

fn corners(rows: &Rows) -> Vec<(usize, usize)> {
    rows.iter()
        .enumerate()
        .filter(|&(r, row)| r + 1 == rows.len() || rows[r + 1].len() < row.len())
        .map(|(r, row)| (r, row.len() - 1))
        .collect()
}

fn is_corner(rows: &Rows, r: usize, c: usize) -> bool {
    r < rows.len() && c + 1 == rows[r].len() && (r + 1 == rows.len() || rows[r + 1].len() <= c)
}

fn remove_corner(rows: &mut Rows, r: usize) -> u32 {
    let u = rows[r].pop().expect("corner row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    u
}

/// Removes the corner at `(r, c)` and bumps upwards: in each row above, the
/// carried value replaces the rightmost entry strictly smaller than it. The
/// entry pushed out of the first row is returned. `path` receives the
/// positions whose entries were displaced, from `(r, c)` up to row 0.
fn delete_in_rows(rows: &mut Rows, r: usize, c: usize, mut path: Option<&mut Vec<(usize, usize)>>) -> Result<u32> {
    if !is_corner(rows, r, c) {
        let u = rows.get(r).and_then(|row| row.get(c)).copied().unwrap_or(0);
        return Err(Error::NotACorner(u));
    }
    if let Some(p) = path.as_deref_mut() {
        p.push((r, c));
    }
    let mut carried = remove_corner(rows, r);
    for row in (0..r).rev() {
        let pos = rows[row]
            .iter()
            .rposition(|&y| y < carried)
            .ok_or_else(|| Error::InvalidTableau("delete requires a standard tableau".into()))?;
        std::mem::swap(&mut rows[row][pos], &mut carried);
        if let Some(p) = path.as_deref_mut() {
            p.push((row, pos));
        }
    }
    Ok(carried)
}

/// Position of the largest entry, ties broken by the largest column index.
fn largest_rightmost(rows: &Rows) -> Option<(usize, usize)> {
    let mut best: Option<(u32, usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            let better = match best {
                None => true,
                Some((bx, _, bc)) => x > bx || (x == bx && c > bc),
            };
            if better {
                best = Some((x, r, c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// A two-lined array `(u_k, v_k)`, identified with the monomial `prod X(v_k,u_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TwoLinedArray {
    pairs: Vec<(u32, u32)>,
}

impl TwoLinedArray {
    pub fn new(pairs: Vec<(u32, u32)>) -> Self {
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn bottom_line(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(_, v)| v).collect()
    }

    /// `u` weakly decreasing, and `v` weakly increasing wherever `u` repeats.
    pub fn satisfies_order_conditions(&self) -> bool {
        self.pairs
            .windows(2)
            .all(|w| w[0].0 > w[1].0 || (w[0].0 == w[1].0 && w[0].1 <= w[1].1))
    }

    /// Columns in weakly decreasing lexicographic order. This is the order in
    /// which BKRS and KRS emit their columns: equal `u` values leave the
    /// tableau right to left, so their partners `v` come out decreasing.
    pub fn is_lex_decreasing(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0] >= w[1])
    }

    /// `u` weakly decreasing and `u > v >= 1` in every column. The order of
    /// columns sharing the same `u` is not constrained, since the array only
    /// stands for a monomial.
    pub fn is_bkrs_format(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].0 >= w[1].0) && self.pairs.iter().all(|&(u, v)| u > v && v > 0)
    }

    /// The same columns sorted lexicographically decreasing.
    pub fn canonical(&self) -> TwoLinedArray {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| b.cmp(a));
        TwoLinedArray { pairs }
    }

    pub fn to_monomial(&self) -> Result<Monomial> {
        let pts = self
            .pairs
            .iter()
            .map(|&(u, v)| LatticePoint::from_pair(u, v).map(|p| (p, 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_factors(pts))
    }

    /// The array in BKRS format for a monomial: each `X(i,j)` becomes the column `(j, i)`.
    pub fn from_monomial(m: &Monomial) -> Self {
        let mut pairs: Vec<(u32, u32)> = m
            .factors()
            .iter()
            .flat_map(|&(p, e)| std::iter::repeat_n((p.col(), p.row()), e as usize))
            .collect();
        pairs.sort_by(|a, b| b.cmp(a));
        Self { pairs }
    }
}

impl fmt::Display for TwoLinedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.pairs.iter().map(|p| p.0.to_string()).collect();
        let bottom: Vec<String> = self.pairs.iter().map(|p| p.1.to_string()).collect();
        write!(f, "({} / {})", top.join(" "), bottom.join(" "))
    }
}

pub fn is_standard(t: &Tableau) -> bool {
    t.is_standard()
}

pub fn delete(t: &Tableau, u: u32) -> Result<(u32, Tableau)> {
    t.delete(u)
}

/// KRS on a standard bi-tableau of equal shape.
pub fn krs(t1: &Tableau, t2: &Tableau) -> Result<TwoLinedArray> {
    if t1.shape() != t2.shape() {
        return Err(Error::ShapeMismatch {
            left: t1.shape(),
            right: t2.shape(),
        });
    }
    if !t1.is_standard() || !t2.is_standard() {
        return Err(Error::InvalidTableau("KRS needs standard tableaux".into()));
    }
    let mut rows1 = t1.rows();
    let mut rows2 = t2.rows();
    let mut pairs = Vec::with_capacity(t1.cell_count());
    while let Some((r, c)) = largest_rightmost(&rows1) {
        let u = remove_corner(&mut rows1, r);
        let v = delete_in_rows(&mut rows2, r, c, None)?;
        pairs.push((u, v));
    }
    Ok(TwoLinedArray::new(pairs))
}

/// One BKRS step: `u` left position `removed`, then `delete` ran from the
/// cell above it; `path` lists the displaced positions bottom-up
/// (positions refer to the tableau before this step, 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkrsStep {
    pub u: u32,
    pub v: u32,
    pub removed: (usize, usize),
    pub path: Vec<(usize, usize)>,
}

fn check_bkrs_input(t: &Tableau) -> Result<()> {
    if !t.is_d_tableau() {
        return Err(Error::InvalidTableau("BKRS needs a d-tableau (even columns)".into()));
    }
    if !t.is_standard() {
        return Err(Error::InvalidTableau("BKRS needs a standard tableau".into()));
    }
    Ok(())
}

/// BKRS with the full step trace.
pub fn bkrs_trace(t: &Tableau) -> Result<Vec<BkrsStep>> {
    check_bkrs_input(t)?;
    let mut rows = t.rows();
    let mut steps = Vec::with_capacity(t.cell_count() / 2);
    while let Some((r, c)) = largest_rightmost(&rows) {
        // even columns put the maximum on an even row, so r >= 1
        let u = remove_corner(&mut rows, r);
        let mut path = Vec::new();
        let v = delete_in_rows(&mut rows, r - 1, c, Some(&mut path))?;
        steps.push(BkrsStep {
            u,
            v,
            removed: (r, c),
            path,
        });
    }
    Ok(steps)
}

pub fn bkrs(t: &Tableau) -> Result<TwoLinedArray> {
    Ok(TwoLinedArray::new(
        bkrs_trace(t)?.into_iter().map(|s| (s.u, s.v)).collect(),
    ))
}

/// Reverses BKRS one step at a time: `v` is row-inserted (bumping the
/// leftmost strictly larger entry), and `u` is placed directly below the
/// cell where the insertion ended. Columns sharing a `u` are first put in
/// the order BKRS emits them. The result is accepted only when it is a
/// standard d-tableau whose BKRS image is the input again.
pub fn bkrs_inverse(a: &TwoLinedArray) -> Result<Tableau> {
    if !a.is_bkrs_format() {
        return Err(Error::NotInImage(format!(
            "{a} needs weakly decreasing u and u > v in every column"
        )));
    }
    let a = &a.canonical();
    let mut rows: Rows = Vec::new();
    for &(u, v) in a.pairs().iter().rev() {
        let mut x = v;
        let mut r = 0;
        let (er, ec) = loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break (r, 0);
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(p) => {
                    std::mem::swap(&mut rows[r][p], &mut x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break (r, rows[r].len() - 1);
                }
            }
        };
        if er + 1 == rows.len() {
            if ec != 0 {
                return Err(Error::NotInImage(format!("{a}: no cell below insertion end")));
            }
            rows.push(vec![u]);
        } else if rows[er + 1].len() == ec {
            rows[er + 1].push(u);
        } else {
            return Err(Error::NotInImage(format!("{a}: no cell below insertion end")));
        }
    }
    let t = Tableau::from_rows(rows).map_err(|e| Error::NotInImage(e.to_string()))?;
    if !t.is_d_tableau() || !t.is_standard() || bkrs(&t)? != *a {
        return Err(Error::NotInImage(format!("{a} has no standard d-tableau preimage")));
    }
    Ok(t)
}

/// Length of the longest strictly increasing subsequence of the bottom line.
pub fn width(a: &TwoLinedArray) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &(_, v) in a.pairs() {
        let pos = tails.partition_point(|&x| x < v);
        if pos == tails.len() {
            tails.push(v);
        } else {
            tails[pos] = v;
        }
    }
    tails.len()
}

/// Every standard d-tableau with entries in `1..=max_entry`, optionally
/// bounded in cells and columns. Includes the empty tableau.
pub fn standard_d_tableaux(max_entry: u32, max_cells: Option<usize>, max_columns: Option<usize>) -> Vec<Tableau> {
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for mask in 1u64..(1u64 << max_entry) {
        if mask.count_ones() % 2 == 0 {
            cols.push((1..=max_entry).filter(|&i| mask >> (i - 1) & 1 == 1).collect());
        }
    }
    cols.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut out = Vec::new();
    let mut cur: Vec<Vec<u32>> = Vec::new();
    fn rec(
        cols: &[Vec<u32>],
        cur: &mut Vec<Vec<u32>>,
        cells: usize,
        max_cells: usize,
        max_columns: usize,
        out: &mut Vec<Tableau>,
    ) {
        out.push(Tableau { columns: cur.clone() });
        if cur.len() == max_columns {
            return;
        }
        for c in cols {
            if cells + c.len() > max_cells {
                continue;
            }
            if let Some(prev) = cur.last() {
                if c.len() > prev.len() || c.iter().zip(prev).any(|(x, p)| x < p) {
                    continue;
                }
            }
            cur.push(c.clone());
            rec(cols, cur, cells + c.len(), max_cells, max_columns, out);
            cur.pop();
        }
    }
    rec(
        &cols,
        &mut cur,
        0,
        max_cells.unwrap_or(usize::MAX),
        max_columns.unwrap_or(usize::MAX),
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(c: &[&[u32]]) -> Tableau {
        Tableau::from_columns(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn rows(r: &[&[u32]]) -> Tableau {
        Tableau::from_rows(r.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn x(i: u32, j: u32) -> Monomial {
        Monomial::var(LatticePoint::new(i, j).unwrap())
    }

    #[test]
    fn standardness_and_shape() {
        let t = cols(&[&[1, 2, 3, 4], &[2, 3, 4, 5], &[2, 6]]);
        assert!(t.is_standard());
        assert!(t.is_d_tableau());
        assert_eq!(t.shape(), vec![3, 3, 2, 2]);
        assert_eq!(t.length(), 4);
        assert!(cols(&[&[1, 2]]).is_standard());
        assert!(!cols(&[&[2, 3], &[1, 4]]).is_standard());
    }

    #[test]
    fn malformed_tableaux_rejected() {
        assert!(Tableau::from_columns(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_columns(vec![vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(Tableau::from_columns(vec![vec![]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn delete_examples() {
        let (v, t2) = rows(&[&[1, 2], &[3, 3], &[4]]).delete(4).unwrap();
        assert_eq!(v, 2);
        assert_eq!(t2, rows(&[&[1, 3], &[3, 4]]));

        let (v, t2) = rows(&[&[5]]).delete(5).unwrap();
        assert_eq!(v, 5);
        assert!(t2.is_empty());

        let (v, t2) = rows(&[&[1, 2]]).delete(2).unwrap();
        assert_eq!(v, 2);
        assert_eq!(t2, rows(&[&[1]]));
    }

    #[test]
    fn delete_rejects_non_corner() {
        let t = rows(&[&[1, 2], &[3, 3], &[4]]);
        assert_eq!(t.delete(1), Err(Error::NotACorner(1)));
        assert!(t.delete_at(0, 0).is_err());
    }

    #[test]
    fn bkrs_worked_example() {
        let t = cols(&[&[1, 3, 4, 5], &[2, 3], &[2, 5]]);
        let a = bkrs(&t).unwrap();
        assert_eq!(a.pairs(), &[(5, 2), (5, 2), (4, 3), (3, 1)]);
        assert_eq!(a.to_monomial().unwrap(), x(2, 5).pow(2).mul(&x(3, 4)).mul(&x(1, 3)));
        assert_eq!(width(&a), 2);
        assert_eq!(bkrs_inverse(&a).unwrap(), t);
    }

    #[test]
    fn krs_worked_example() {
        let t = cols(&[&[1, 3, 4, 5], &[2, 3], &[2, 5]]);
        let f = krs(&t, &t).unwrap();
        // same column order as the hand trace; ties in u are not v-sorted here
        assert_eq!(
            f.pairs(),
            &[(5, 2), (5, 2), (4, 3), (3, 4), (3, 1), (2, 5), (2, 5), (1, 3)]
        );
        assert_eq!(
            f.to_monomial().unwrap(),
            x(2, 5).pow(4).mul(&x(3, 4).pow(2)).mul(&x(1, 3).pow(2))
        );
        assert_eq!(width(&f), 4);
    }

    #[test]
    fn krs_single_column() {
        let t = cols(&[&[1, 2]]);
        let f = krs(&t, &t).unwrap();
        assert_eq!(f.pairs(), &[(2, 1), (1, 2)]);
        assert_eq!(f.to_monomial().unwrap(), x(1, 2).pow(2));
    }

    #[test]
    fn krs_shape_mismatch() {
        let a = cols(&[&[1, 2]]);
        let b = cols(&[&[1, 2, 3, 4]]);
        assert!(matches!(krs(&a, &b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn trivial_bkrs_cases() {
        assert!(bkrs(&Tableau::empty()).unwrap().is_empty());
        assert_eq!(bkrs(&cols(&[&[1, 2]])).unwrap().pairs(), &[(2, 1)]);
        assert_eq!(bkrs_inverse(&TwoLinedArray::default()).unwrap(), Tableau::empty());
        assert_eq!(
            bkrs_inverse(&TwoLinedArray::new(vec![(2, 1)])).unwrap(),
            cols(&[&[1, 2]])
        );
        assert!(bkrs(&cols(&[&[1, 2, 3]])).is_err());
        assert!(bkrs(&cols(&[&[2, 3], &[1, 4]])).is_err());
    }

    #[test]
    fn bkrs_inverse_rejects_bad_format() {
        for pairs in [vec![(1, 2)], vec![(3, 3)], vec![(2, 1), (3, 1)], vec![(3, 0)]] {
            assert!(matches!(
                bkrs_inverse(&TwoLinedArray::new(pairs)),
                Err(Error::NotInImage(_))
            ));
        }
    }

    #[test]
    fn width_examples() {
        let a = TwoLinedArray::new(vec![(5, 2), (5, 2), (4, 3), (3, 1)]);
        assert_eq!(width(&a), 2);
        assert_eq!(width(&TwoLinedArray::default()), 0);
        let b = TwoLinedArray::new(vec![(9, 2), (8, 3), (7, 4), (6, 5)]);
        assert_eq!(width(&b), 4);
    }

    #[test]
    fn monomial_array_identification() {
        let m = x(2, 5).pow(2).mul(&x(3, 4)).mul(&x(1, 3));
        let a = TwoLinedArray::from_monomial(&m);
        assert_eq!(a.pairs(), &[(5, 2), (5, 2), (4, 3), (3, 1)]);
        assert!(a.is_bkrs_format());
        let tie = TwoLinedArray::from_monomial(&x(1, 4).mul(&x(3, 4)));
        assert_eq!(tie.pairs(), &[(4, 3), (4, 1)]);
        assert!(tie.is_lex_decreasing() && !tie.satisfies_order_conditions());
    }

    #[test]
    fn enumeration_is_standard_and_bounded() {
        let all = standard_d_tableaux(4, Some(4), None);
        assert!(all
            .iter()
            .all(|t| t.is_standard() && t.is_d_tableau() && t.cell_count() <= 4));
        // empty, six 2-columns, one 4-column, and 20 row-weak pairs of 2-columns
        let pairs = all.iter().filter(|t| t.columns().len() == 2).count();
        assert_eq!(pairs, 20);
        assert_eq!(all.len(), 1 + 6 + 1 + pairs);
    }
}
