//! Fixed-width bit-row helpers shared by the graph and search code.

/// One adjacency row: bit `u` is set iff `u` is a neighbour.
pub type Row = u128;

#[inline(always)]
pub const fn bit(v: usize) -> Row {
    1u128 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_bits(n: usize) -> Row {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterator over the set bit positions of a row, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub Row);

impl Iterator for Bits {
    type Item = usize;

    #[inline(always)]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[inline(always)]
pub fn bits(row: Row) -> Bits {
    Bits(row)
}

/// Position of edge `{u, v}` in colex order: all edges of the back-neighbourhood of
/// vertex `v` occupy the contiguous block starting at `v(v-1)/2`.
#[inline(always)]
pub const fn edge_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`edge_index`].
pub fn edge_at(index: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    (index - v * (v - 1) / 2, v)
}

#[inline(always)]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Iterates over all `k`-subsets of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
