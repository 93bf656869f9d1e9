//! Arithmetic in Z/N and Howell-form echelonization of Z/N-submodules of (Z/N)^c.
//!
//! All values live in `[0, N)` with `N < 2^62`, so products fit in `i128`
//! without any possibility of overflow.

/// Largest modulus accepted by the Z/N routines.
pub const MAX_MODULUS: i128 = 1 << 62;

/// Extended gcd on nonnegative inputs: `(g, s, t)` with `g = s*a + t*b`.
pub fn gcdex(a: i128, b: i128) -> (i128, i128, i128) {
    // every intermediate is bounded by max(|a|, |b|) < 2^62
    let (mut old_r, mut r) = (a as i64, b as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r as i128, -old_s as i128, -old_t as i128)
    } else {
        (old_r as i128, old_s as i128, old_t as i128)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    gcdex(a.abs(), b.abs()).0
}

pub fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// A unit `u` of Z/n with `u * a ≡ gcd(a, n) (mod n)`.
pub fn unit_normalizer(a: i128, n: i128) -> i128 {
    let a = a.rem_euclid(n);
    if a == 0 || n == 1 {
        return 1;
    }
    let g = gcd(a, n);
    let (ap, np) = (a / g, n / g);
    let u0 = if np == 1 { 0 } else { gcdex(ap, np).1.rem_euclid(np) };
    // Lift u0 from a unit mod n/g to a unit mod n.
    let mut u = u0;
    while gcd(u, n) != 1 {
        u += np;
    }
    u % n
}

/// Below this bound `ca*x + cb*y` with all four terms under `n` fits in `i64`.
const SMALL: i128 = 1 << 30;

/// `(ca*x + cb*y) mod n` for `|ca|, |cb|, x, y <= n`, in `i64` when `n` allows.
#[inline]
pub fn lin_mod(ca: i128, x: i128, cb: i128, y: i128, n: i128) -> i128 {
    if n <= SMALL {
        ((ca as i64) * (x as i64) + (cb as i64) * (y as i64)).rem_euclid(n as i64) as i128
    } else {
        (ca * x + cb * y).rem_euclid(n)
    }
}

/// `x mod m` for an accumulator that usually fits in `i64`.
#[inline]
pub fn reduce_acc(x: i128, m: i64) -> i64 {
    match i64::try_from(x) {
        Ok(v) => v.rem_euclid(m),
        Err(_) => x.rem_euclid(m as i128) as i64,
    }
}

fn leading(v: &[i128]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

/// Incremental Howell-form builder over Z/n.
///
/// Rows are stored by pivot column. Each insertion keeps the stored rows in
/// echelon form and also feeds back the annihilator multiple `(n/p)·row` of
/// every new pivot row, which is what gives the Howell property.
pub struct HowellBuilder {
    n: i128,
    slots: Vec<Option<Vec<i128>>>,
    stack: Vec<Vec<i128>>,
    spare: Vec<Vec<i128>>,
}

impl HowellBuilder {
    pub fn new(n: i128, cols: usize) -> Self {
        debug_assert!((1..=MAX_MODULUS).contains(&n));
        HowellBuilder { n, slots: vec![None; cols], stack: Vec::new(), spare: Vec::new() }
    }

    /// `c·v mod n` in a recycled buffer.
    fn scaled(&mut self, v: &[i128], c: i128) -> Vec<i128> {
        let mut w = self.spare.pop().unwrap_or_default();
        w.clear();
        w.extend(v.iter().map(|&x| lin_mod(c, x, 0, 0, self.n)));
        w
    }

    pub fn insert(&mut self, mut v: Vec<i128>) {
        let n = self.n;
        for x in v.iter_mut().filter(|x| !(0..n).contains(*x)) {
            *x = x.rem_euclid(n);
        }
        self.stack.push(v);
        while let Some(mut v) = self.stack.pop() {
            let Some(c) = leading(&v) else {
                self.spare.push(v);
                continue;
            };
            match self.slots[c].take() {
                None => {
                    let u = unit_normalizer(v[c], n);
                    if u != 1 {
                        v.iter_mut().for_each(|x| *x = lin_mod(u, *x, 0, 0, n));
                    }
                    if v[c] != 1 {
                        let ann = self.scaled(&v, n / v[c]);
                        self.stack.push(ann);
                    }
                    self.slots[c] = Some(v);
                }
                Some(mut r) => {
                    let (a, b) = (r[c], v[c]);
                    if b % a == 0 {
                        let q = b / a;
                        v.iter_mut().zip(&r).for_each(|(x, &y)| *x = lin_mod(1, *x, -q, y, n));
                        self.stack.push(v);
                        self.slots[c] = Some(r);
                    } else {
                        let (g, s, t) = gcdex(a, b);
                        let mut top = self.spare.pop().unwrap_or_default();
                        top.clear();
                        top.extend(r.iter().zip(&v).map(|(&x, &y)| lin_mod(s, x, t, y, n)));
                        debug_assert_eq!(top[c], g);
                        v.iter_mut().zip(&r).for_each(|(x, &y)| *x = lin_mod(a / g, *x, -(b / g), y, n));
                        self.stack.push(v);
                        r.iter_mut().zip(&top).for_each(|(x, &y)| *x = lin_mod(n / g, y, 0, 0, n));
                        self.stack.push(r);
                        self.slots[c] = Some(top);
                    }
                }
            }
        }
    }

    /// The reduced Howell form: pivot rows in column order, entries above each
    /// pivot reduced into `[0, pivot)`.
    pub fn finish(self) -> Vec<Vec<i128>> {
        let n = self.n;
        let mut rows: Vec<(usize, Vec<i128>)> =
            self.slots.into_iter().enumerate().filter_map(|(c, r)| r.map(|r| (c, r))).collect();
        for j in 0..rows.len() {
            let (c, p) = (rows[j].0, rows[j].1[rows[j].0]);
            let (above, below) = rows.split_at_mut(j);
            let pivot_row = &below[0].1;
            for (_, row) in above.iter_mut() {
                let q = row[c].div_euclid(p);
                if q != 0 {
                    for (x, &y) in row.iter_mut().zip(pivot_row) {
                        *x = lin_mod(1, *x, -q, y, n);
                    }
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Pivot column of a Howell row.
pub fn pivot_of(row: &[i128]) -> usize {
    leading(row).expect("Howell rows are nonzero")
}
