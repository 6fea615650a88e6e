//! Check reports and the basis-tuple scanner shared by every checker.
//!
//! All identities checked in this crate are multilinear, so they hold on the
//! whole space iff they hold on every tuple of basis vectors. The scanner walks
//! those tuples in lexicographic order and records `LHS − RHS` wherever it is
//! nonzero.

use std::fmt;

use rayon::prelude::*;

use crate::linalg::Vector;

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Identity label, e.g. `"Eq. (16)"`.
    pub identity: String,
    /// Zero-based basis indices of the offending tuple.
    pub indices: Vec<usize>,
    /// Exact `LHS − RHS`. Operator-valued identities are flattened row-major.
    pub discrepancy: Vector,
}

impl Violation {
    /// `(e2,e1,e1)`-style rendering of the tuple.
    pub fn tuple_label(&self) -> String {
        let parts: Vec<String> = self.indices.iter().map(|i| format!("e{}", i + 1)).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {}: LHS - RHS = {}", self.identity, self.tuple_label(), self.discrepancy)
    }
}

/// Outcome of a checker. Passing means no violations were found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Violations of a single identity.
    pub fn of(&self, identity: &str) -> impl Iterator<Item = &Violation> {
        let id = identity.to_string();
        self.violations.iter().filter(move |v| v.identity == id)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "PASS");
        }
        writeln!(f, "FAIL ({} violation(s))", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Knobs shared by all checkers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Collect every violation instead of stopping at the first.
    pub all_violations: bool,
    /// Run a checker even when the kind tag does not match.
    pub force: bool,
    /// Evaluate tuples on the ambient rayon pool.
    pub parallel: bool,
}

impl CheckOptions {
    pub fn all() -> Self {
        CheckOptions { all_violations: true, ..Default::default() }
    }

    pub fn forced() -> Self {
        CheckOptions { force: true, ..Default::default() }
    }
}

/// Accumulates violations across several identities.
pub(crate) struct Scan {
    opts: CheckOptions,
    report: CheckReport,
}

impl Scan {
    pub fn new(opts: &CheckOptions) -> Self {
        Scan { opts: *opts, report: CheckReport::default() }
    }

    pub fn stopped(&self) -> bool {
        !self.opts.all_violations && !self.report.violations.is_empty()
    }

    /// Checks `f` on every tuple of `[0, dims[0]) × … × [0, dims[r-1])`.
    pub fn tuples<F>(&mut self, identity: &str, dims: &[usize], f: F)
    where
        F: Fn(&[usize]) -> Vector + Sync,
    {
        if self.stopped() {
            return;
        }
        let tuples = all_tuples(dims);
        let found: Vec<Violation> = if self.opts.parallel {
            let mut hits: Vec<Violation> = tuples
                .par_iter()
                .filter_map(|t| violation(identity, t, &f))
                .collect();
            if !self.opts.all_violations {
                hits.truncate(1);
            }
            hits
        } else {
            let mut hits = Vec::new();
            for t in &tuples {
                if let Some(v) = violation(identity, t, &f) {
                    hits.push(v);
                    if !self.opts.all_violations {
                        break;
                    }
                }
            }
            hits
        };
        self.report.violations.extend(found);
    }

    pub fn triples<F>(&mut self, identity: &str, n: usize, f: F)
    where
        F: Fn(usize, usize, usize) -> Vector + Sync,
    {
        self.tuples(identity, &[n, n, n], |t| f(t[0], t[1], t[2]));
    }

    pub fn pairs<F>(&mut self, identity: &str, n: usize, f: F)
    where
        F: Fn(usize, usize) -> Vector + Sync,
    {
        self.tuples(identity, &[n, n], |t| f(t[0], t[1]));
    }

    pub fn singles<F>(&mut self, identity: &str, n: usize, f: F)
    where
        F: Fn(usize) -> Vector + Sync,
    {
        self.tuples(identity, &[n], |t| f(t[0]));
    }

    pub fn finish(self) -> CheckReport {
        self.report
    }
}

fn violation<F: Fn(&[usize]) -> Vector>(identity: &str, t: &[usize], f: &F) -> Option<Violation> {
    let d = f(t);
    (!d.is_zero()).then(|| Violation { identity: identity.to_string(), indices: t.to_vec(), discrepancy: d })
}

fn all_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    if dims.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0; dims.len()];
    loop {
        out.push(cur.clone());
        let mut pos = dims.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < dims[pos] {
                break;
            }
            cur[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        let t = all_tuples(&[2, 3]);
        assert_eq!(t.len(), 6);
        assert_eq!(t[0], vec![0, 0]);
        assert_eq!(t[1], vec![0, 1]);
        assert_eq!(t[3], vec![1, 0]);
        assert!(all_tuples(&[2, 0]).is_empty());
        assert_eq!(all_tuples(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn first_only_stops_and_parallel_agrees() {
        let f = |i: usize, j: usize| {
            if (i + j) % 2 == 1 {
                Vector::from_i64(&[1])
            } else {
                Vector::zeros(1)
            }
        };
        for parallel in [false, true] {
            let mut s = Scan::new(&CheckOptions { parallel, ..Default::default() });
            s.pairs("odd", 4, f);
            s.pairs("never reached", 4, f);
            let r = s.finish();
            assert_eq!(r.violations.len(), 1);
            assert_eq!(r.violations[0].indices, vec![0, 1]);

            let mut s = Scan::new(&CheckOptions { parallel, all_violations: true, force: false });
            s.pairs("odd", 4, f);
            assert_eq!(s.finish().violations.len(), 8);
        }
    }

    #[test]
    fn rendering() {
        let v = Violation { identity: "Eq. (16)".into(), indices: vec![1, 0, 0], discrepancy: Vector::from_i64(&[0, 1]) };
        assert_eq!(v.to_string(), "Eq. (16) violated at (e2,e1,e1): LHS - RHS = e2");
    }
}
