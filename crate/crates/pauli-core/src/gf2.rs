//! Linear algebra over GF(2) on [`BitVec`] rows.

use crate::bits::BitVec;

/// Incremental row basis. Every stored row has a distinct pivot (its lowest
/// set bit), and rows are kept sorted by pivot, so reduction is a single pass.
/// Each row also carries the combination of inserted vectors that produced it.
#[derive(Clone, Debug)]
pub struct XorBasis {
    len: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
    inserted: usize,
}

impl XorBasis {
    pub fn new(len: usize) -> Self {
        XorBasis {
            len,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a BitVec>>(len: usize, rows: I) -> Self {
        let mut b = XorBasis::new(len);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of vectors offered to `insert` so far (the width of combinations).
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` and returns the remainder together with the combination
    /// (over inserted vectors) that was subtracted.
    fn reduce_tracked(&self, v: &BitVec) -> (BitVec, BitVec) {
        assert_eq!(v.len(), self.len, "basis length mismatch");
        let mut r = v.clone();
        let mut combo = BitVec::zeros(self.inserted);
        for (p, row, c) in &self.rows {
            if r.get(*p) {
                r.xor_assign(row);
                let mut c = c.clone();
                c.resize(self.inserted);
                combo.xor_assign(&c);
            }
        }
        (r, combo)
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; true when it was independent of the rows already present.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let (r, mut combo) = self.reduce_tracked(v);
        let idx = self.inserted;
        self.inserted += 1;
        combo.resize(self.inserted);
        combo.flip(idx);
        match r.first_one() {
            None => false,
            Some(p) => {
                let pos = self.rows.partition_point(|(q, _, _)| *q < p);
                self.rows.insert(pos, (p, r, combo));
                true
            }
        }
    }

    /// Combination of inserted vectors XOR-ing to `v`, if `v` is in the span.
    pub fn express(&self, v: &BitVec) -> Option<BitVec> {
        let (r, combo) = self.reduce_tracked(v);
        if r.is_zero() {
            Some(combo)
        } else {
            None
        }
    }

    /// Basis rows in pivot order (not reduced above pivots).
    pub fn rows(&self) -> impl Iterator<Item = &BitVec> {
        self.rows.iter().map(|(_, r, _)| r)
    }

    /// Fully reduced row echelon form, rows sorted by pivot.
    pub fn reduced_rows(&self) -> Vec<BitVec> {
        let mut rows: Vec<(usize, BitVec)> =
            self.rows.iter().map(|(p, r, _)| (*p, r.clone())).collect();
        for i in (0..rows.len()).rev() {
            let (p, ri) = (rows[i].0, rows[i].1.clone());
            for row in rows.iter_mut().take(i) {
                if row.1.get(p) {
                    row.1.xor_assign(&ri);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

pub fn rank(rows: &[BitVec]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => XorBasis::from_rows(r.len(), rows).rank(),
    }
}

/// Indicator of a subset of `rows` XOR-ing to `target`.
pub fn solve_combination(rows: &[BitVec], target: &BitVec) -> Option<BitVec> {
    let mut b = XorBasis::new(target.len());
    for r in rows {
        b.insert(r);
    }
    b.express(target)
}

/// Finds `x` with `dot(a_i, x) = rhs_i` for every row `a_i`, choosing free
/// variables as zero. `cols` is the length of `x`.
pub fn solve_linear(a: &[BitVec], rhs: &[bool], cols: usize) -> Option<BitVec> {
    assert_eq!(a.len(), rhs.len());
    let mut rows: Vec<(BitVec, bool)> = a
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            assert_eq!(r.len(), cols);
            (r.clone(), b)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(k) = (next..rows.len()).find(|&k| rows[k].0.get(col)) else {
            continue;
        };
        rows.swap(next, k);
        let (pr, pb) = rows[next].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != next && row.0.get(col) {
                row.0.xor_assign(&pr);
                row.1 ^= pb;
            }
        }
        pivots.push(col);
        next += 1;
    }
    if rows[next..].iter().any(|(_, b)| *b) {
        return None;
    }
    let mut x = BitVec::zeros(cols);
    for (k, &col) in pivots.iter().enumerate() {
        if rows[k].1 {
            x.set(col, true);
        }
    }
    Some(x)
}

/// Basis of the left kernel: subsets of `rows` whose XOR is zero.
pub fn left_kernel(rows: &[BitVec]) -> Vec<BitVec> {
    let Some(first) = rows.first() else {
        return Vec::new();
    };
    let mut b = XorBasis::new(first.len());
    let mut out = Vec::new();
    for r in rows {
        if let Some(mut c) = b.express(r) {
            c.resize(rows.len());
            c.flip(b.inserted());
            out.push(c);
        }
        b.insert(r);
    }
    for c in &mut out {
        c.resize(rows.len());
    }
    out
}
