//! Column selection in a vertex grid so that every row becomes a monochromatic
//! clique.

use crate::bits::{bit, bits, Row};
use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::params::max_clique_within;

/// Largest column count for the exhaustive fallback.
pub const EXHAUSTIVE_COLUMNS: usize = 20;

/// Columns `L` with `|L| = ell` such that each row of `layout` restricted to `L`
/// is a monochromatic clique (the color may differ between rows).
///
/// Rows are processed in order, each shrinking the candidate columns to those of
/// a largest monochromatic clique inside them; when that leaves fewer than `ell`
/// columns and `q ≤ 20`, all `ell`-subsets are tried in lexicographic order.
pub fn grid_alignment(
    c: &TwoColoring,
    m: usize,
    q: usize,
    ell: usize,
    layout: &[Vec<usize>],
) -> Result<Option<Vec<usize>>> {
    if layout.len() != m || layout.iter().any(|row| row.len() != q) {
        return Err(Error::InvalidParameter(format!("layout is not a {m} x {q} matrix")));
    }
    let mut seen: Row = 0;
    for &v in layout.iter().flatten() {
        if v >= c.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: c.n() });
        }
        if seen & bit(v) != 0 {
            return Err(Error::InvalidParameter(format!("vertex {v} appears twice in the layout")));
        }
        seen |= bit(v);
    }
    if ell > q {
        return Ok(None);
    }
    if let Some(cols) = iterative(c, layout, q, ell) {
        return Ok(Some(cols));
    }
    if q <= EXHAUSTIVE_COLUMNS {
        return Ok(exhaustive(c, layout, q, ell));
    }
    Ok(None)
}

fn iterative(c: &TwoColoring, layout: &[Vec<usize>], q: usize, ell: usize) -> Option<Vec<usize>> {
    let mut cols: Row = if q == 0 { 0 } else { (1u128 << q) - 1 };
    for row in layout {
        // Column-indexed color graphs for this row.
        let red: Vec<Row> = (0..q)
            .map(|i| (0..q).filter(|&j| j != i && c.is_red(row[i], row[j])).fold(0, |m, j| m | bit(j)))
            .collect();
        let blue: Vec<Row> = (0..q)
            .map(|i| (0..q).filter(|&j| j != i && !c.is_red(row[i], row[j])).fold(0, |m, j| m | bit(j)))
            .collect();
        let r = max_clique_within(&red, cols);
        let b = max_clique_within(&blue, cols);
        cols = if r.count_ones() >= b.count_ones() { r } else { b };
        if (cols.count_ones() as usize) < ell {
            return None;
        }
    }
    Some(bits(cols).take(ell).collect())
}

fn exhaustive(c: &TwoColoring, layout: &[Vec<usize>], q: usize, ell: usize) -> Option<Vec<usize>> {
    let mut found = None;
    crate::bits::for_each_combination(q, ell, |cols| {
        if layout.iter().all(|row| is_mono_clique(c, cols.iter().map(|&j| row[j]))) {
            found = Some(cols.to_vec());
            return false;
        }
        true
    });
    found
}

/// Whether the vertices span a clique in a single color.
pub fn is_mono_clique(c: &TwoColoring, vertices: impl IntoIterator<Item = usize>) -> bool {
    let vs: Vec<usize> = vertices.into_iter().collect();
    let mut colors = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            colors.push(c.is_red(a, b));
        }
    }
    colors.windows(2).all(|w| w[0] == w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{NamedGraph, SimpleGraph};

    fn grid(m: usize, q: usize) -> Vec<Vec<usize>> {
        (0..m).map(|i| (0..q).map(|j| i * q + j).collect()).collect()
    }

    #[test]
    fn all_red_takes_first_columns() {
        let c = TwoColoring::monochromatic(12, true);
        assert_eq!(grid_alignment(&c, 3, 4, 2, &grid(3, 4)).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn single_row_of_six_always_aligns() {
        let c = TwoColoring::from_red(6, NamedGraph::Cycle(6).build().unwrap()).unwrap();
        let cols = grid_alignment(&c, 1, 6, 3, &grid(1, 6)).unwrap().unwrap();
        assert!(is_mono_clique(&c, cols));
    }

    #[test]
    fn pentagon_rows_block_triangles() {
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        let red = SimpleGraph::disjoint_union(&[c5.clone(), c5.complement()]).unwrap();
        let c = TwoColoring::from_red(10, red).unwrap();
        assert_eq!(grid_alignment(&c, 2, 5, 3, &grid(2, 5)).unwrap(), None);
    }

    #[test]
    fn shape_errors() {
        let c = TwoColoring::monochromatic(6, true);
        assert!(grid_alignment(&c, 2, 3, 2, &[vec![0, 1, 2]]).is_err());
        assert!(grid_alignment(&c, 2, 2, 2, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
