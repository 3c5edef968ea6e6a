use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Result of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    /// Integral of the absolute integrand; the scale for relative tolerances.
    pub abs_value: f64,
    pub error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl Estimate {
    pub fn zero() -> Self {
        Self { value: 0.0, abs_value: 0.0, error: 0.0, evaluations: 0, converged: true }
    }

    pub fn add(&mut self, o: &Estimate) {
        self.value += o.value;
        self.abs_value += o.abs_value;
        self.error += o.error;
        self.evaluations += o.evaluations;
        self.converged &= o.converged;
    }

    pub fn scale(mut self, c: f64) -> Self {
        self.value *= c;
        self.abs_value *= c.abs();
        self.error *= c.abs();
        self
    }
}

/// Absolute/relative stopping criterion: stop when
/// `error ≤ max(abs, rel·∫|f|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: 1e-300, rel: 1e-13, max_intervals: 4000 }
    }
}

impl Tolerance {
    pub fn rel(rel: f64) -> Self {
        Self { rel, ..Self::default() }
    }
}

/// One 15-point Kronrod panel: `(K15, |K15 − G7|, ∫|f|)`.
pub fn gk15<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut ka = fc.abs() * WGK[7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        k += WGK[j] * (f1 + f2);
        ka += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            g += WG[j / 2] * (f1 + f2);
        }
    }
    (k * h, ((k - g) * h).abs(), ka * h.abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error).then(o.a.total_cmp(&self.a))
    }
}

/// Globally adaptive Gauss–Kronrod 15 integration over a finite `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the summed
/// error meets `tol` or the interval budget runs out (`converged = false`).
pub fn integrate_adaptive<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64, tol: Tolerance) -> Estimate {
    integrate_panels(f, &[a, b], tol)
}

/// As [`integrate_adaptive`], starting from the panels delimited by the
/// sorted `breaks`.
pub fn integrate_panels<F: Fn(f64) -> f64 + ?Sized>(f: &F, breaks: &[f64], tol: Tolerance) -> Estimate {
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            let (v, e, s) = gk15(f, w[0], w[1]);
            evals += 15;
            heap.push(Panel { a: w[0], b: w[1], value: v, error: e, abs: s });
        }
    }
    let totals = |h: &BinaryHeap<Panel>| {
        let mut v = crate::sum::CompensatedSum::new();
        let (mut e, mut s) = (0.0, 0.0);
        for p in h.iter() {
            v.add(p.value);
            e += p.error;
            s += p.abs;
        }
        (v.value(), e, s)
    };
    let (mut err, mut abs) = {
        let (_, e, s) = totals(&heap);
        (e, s)
    };
    let mut converged = err <= tol.abs.max(tol.rel * abs);
    while !converged && heap.len() < tol.max_intervals {
        let p = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let m = 0.5 * (p.a + p.b);
        if !(m > p.a && m < p.b) {
            // Interval exhausted at machine resolution.
            heap.push(Panel { error: 0.0, ..p });
            let (_, e, s) = totals(&heap);
            err = e;
            abs = s;
            converged = err <= tol.abs.max(tol.rel * abs);
            continue;
        }
        let (v1, e1, s1) = gk15(f, p.a, m);
        let (v2, e2, s2) = gk15(f, m, p.b);
        evals += 30;
        err += e1 + e2 - p.error;
        abs += s1 + s2 - p.abs;
        heap.push(Panel { a: p.a, b: m, value: v1, error: e1, abs: s1 });
        heap.push(Panel { a: m, b: p.b, value: v2, error: e2, abs: s2 });
        if err <= tol.abs.max(tol.rel * abs) {
            // Recompute from scratch to shed accumulated rounding in the
            // running totals before declaring convergence.
            let (_, e, s) = totals(&heap);
            err = e;
            abs = s;
            converged = err <= tol.abs.max(tol.rel * abs);
        }
    }
    let (value, error, abs_value) = totals(&heap);
    Estimate { value, abs_value, error, evaluations: evals, converged }
}
