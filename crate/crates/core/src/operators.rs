//! Point operators `A_α` (MUB projectors) and line operators `P_j`.
//!
//! Each is built two ways. `A_α` comes either from the outer product of the
//! MUB state or entrywise from
//! `(A_α)_{n,n'} = ω^s / d`, `s = (n - n')((b/2)(n + n' - 1) - m)`.
//! `P_j` comes either from `Σ_{α∈j} A_α - I` or entrywise from
//! `(P_j)_{n,n'} = ω^{-(n - n') m(0)}` on the anti-diagonal `n + n' = 2 m(-1)`
//! and zero elsewhere. The two routes must agree entrywise.

use num_complex::Complex;
use num_traits::Zero;

use crate::geometry::{incident, line_points, lines_through_point, Basis, LineLabel, PointLabel};
use crate::matrix::{CMatrix, Tolerance};
use crate::modular::{omega, Modulus};
use crate::mub::mub_state;
use crate::report::{Audit, AxiomReport};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct PointOperator<T> {
    pub label: PointLabel,
    pub matrix: CMatrix<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineOperator<T> {
    pub label: LineLabel,
    pub matrix: CMatrix<T>,
}

/// `A_α = |m;b><b;m|` from the state vector.
pub fn point_operator<T: Real>(alpha: PointLabel) -> PointOperator<T> {
    PointOperator {
        label: alpha,
        matrix: mub_state::<T>(alpha).projector(),
    }
}

/// `A_α` from its closed-form matrix elements.
pub fn point_operator_direct<T: Real>(alpha: PointLabel) -> PointOperator<T> {
    let d = alpha.modulus();
    let inv_d = T::one() / T::from_count(d.dim());
    let one = d.elem(1);
    let matrix = CMatrix::from_fn(d.dim(), |r, c| {
        let (n, n2) = (d.elem(r as i64), d.elem(c as i64));
        match alpha.b {
            Basis::Computational => {
                if n == n2 && n == alpha.m {
                    Complex::new(T::one(), T::zero())
                } else {
                    Complex::zero()
                }
            }
            Basis::Mub(b) => {
                let s = (n - n2) * (b.half() * (n + n2 - one) - alpha.m);
                omega::<T>(s) * inv_d
            }
        }
    });
    PointOperator { label: alpha, matrix }
}

/// `P_j = Σ_{α∈j} A_α - I`.
pub fn line_operator_sum<T: Real>(j: LineLabel) -> LineOperator<T> {
    let dim = j.modulus().dim();
    let mut matrix = CMatrix::<T>::identity(dim).scale_real(-T::one());
    for alpha in line_points(j) {
        matrix = &matrix + &point_operator::<T>(alpha).matrix;
    }
    LineOperator { label: j, matrix }
}

/// `P_j` from its anti-diagonal closed form.
pub fn line_operator_direct<T: Real>(j: LineLabel) -> LineOperator<T> {
    let d = j.modulus();
    let c = j.c();
    let matrix = CMatrix::from_fn(d.dim(), |r, col| {
        let (n, n2) = (d.elem(r as i64), d.elem(col as i64));
        if n + n2 == c {
            omega::<T>(-((n - n2) * j.m0))
        } else {
            Complex::zero()
        }
    });
    LineOperator { label: j, matrix }
}

/// `tr(A_α A_α')`: 1 when equal, 0 within a column, `1/d` across columns.
pub fn gram_point<T: Real>(alpha: PointLabel, beta: PointLabel) -> T {
    let a = point_operator::<T>(alpha).matrix;
    let b = point_operator::<T>(beta).matrix;
    a.trace_product(&b).expect("same dimension").re
}

/// `Λ_{α,j} = tr(A_α P_j)`, which is 1 when `α ∈ j` and 0 otherwise.
pub fn incidence_trace<T: Real>(alpha: PointLabel, j: LineLabel) -> T {
    let a = point_operator::<T>(alpha).matrix;
    let p = line_operator_direct::<T>(j).matrix;
    a.trace_product(&p).expect("same dimension").re
}

/// Every point and line operator of one dimension, built once.
#[derive(Debug, Clone)]
pub struct OperatorSet<T> {
    d: Modulus,
    points: Vec<PointOperator<T>>,
    lines: Vec<LineOperator<T>>,
}

impl<T: Real> OperatorSet<T> {
    pub fn new(d: Modulus) -> Self {
        OperatorSet {
            d,
            points: PointLabel::all(d).map(point_operator).collect(),
            lines: LineLabel::all(d).map(line_operator_direct).collect(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn point(&self, alpha: PointLabel) -> &PointOperator<T> {
        &self.points[alpha.index()]
    }

    pub fn line(&self, j: LineLabel) -> &LineOperator<T> {
        &self.lines[j.index()]
    }

    pub fn points(&self) -> &[PointOperator<T>] {
        &self.points
    }

    /// Line operators in lexicographic label order.
    pub fn lines(&self) -> &[LineOperator<T>] {
        &self.lines
    }
}

/// Exhaustive check of every operator identity over all labels of dimension d.
///
/// Sums of up to d terms are compared at `d·eps`; the two construction routes
/// are compared entrywise at `eps`.
pub fn verify_operator_identities<T: Real>(d: Modulus, tol: Tolerance<T>) -> AxiomReport {
    let n = d.dim();
    let wide = tol.scaled(n);
    let ops = OperatorSet::<T>::new(d);
    let id = CMatrix::<T>::identity(n);
    let diff = |a: &CMatrix<T>, b: &CMatrix<T>| a.max_abs_diff(b).expect("same dimension");
    let mut report = AxiomReport::new(d.get());

    let mut route_a = Audit::new("operators.point_routes_agree");
    let mut projector = Audit::new("operators.point_is_projector");
    let mut herm = Audit::new("operators.hermitian");
    for a in ops.points() {
        let direct = point_operator_direct::<T>(a.label).matrix;
        let e = diff(&a.matrix, &direct);
        route_a.expect(tol.accepts(e), || format!("A{} routes differ by {e:e}", a.label));
        let e = diff(&(&a.matrix * &a.matrix), &a.matrix);
        let t = (a.matrix.trace() - Complex::new(T::one(), T::zero())).norm();
        projector.expect(wide.accepts(e) && wide.accepts(t), || {
            format!("A{}: |A^2-A|={e:e}, |trA-1|={t:e}", a.label)
        });
        let (r, c, dev) = a.matrix.hermiticity_defect();
        herm.expect(tol.accepts(dev), || {
            format!("A{} entry ({r},{c}) off by {dev:e}", a.label)
        });
    }

    let mut route_p = Audit::new("operators.line_routes_agree");
    let mut trace_one = Audit::new("operators.line_trace_one");
    let mut involution = Audit::new("operators.line_involution");
    for p in ops.lines() {
        let summed = line_operator_sum::<T>(p.label).matrix;
        let e = diff(&p.matrix, &summed);
        route_p.expect(tol.accepts(e), || format!("P{} routes differ by {e:e}", p.label));
        let t = (p.matrix.trace() - Complex::new(T::one(), T::zero())).norm();
        trace_one.expect(wide.accepts(t), || format!("tr P{} off by {t:e}", p.label));
        let e = diff(&(&p.matrix * &p.matrix), &id);
        involution.expect(wide.accepts(e), || format!("P{}^2 - I = {e:e}", p.label));
        let (r, c, dev) = p.matrix.hermiticity_defect();
        herm.expect(tol.accepts(dev), || {
            format!("P{} entry ({r},{c}) off by {dev:e}", p.label)
        });
    }

    let mut column = Audit::new("operators.column_completeness");
    let mut global = CMatrix::<T>::zeros(n);
    for b in Basis::all(d) {
        let mut sum = CMatrix::<T>::zeros(n);
        for m in d.residues() {
            sum = &sum + &ops.point(PointLabel::new(m, b)).matrix;
        }
        let e = diff(&sum, &id);
        column.expect(wide.accepts(e), || format!("column {b} sums to I within {e:e}"));
        global = &global + &sum;
    }
    let mut global_sum = Audit::new("operators.global_sum");
    let e = diff(&global, &id.scale_real(T::from_count(n + 1)));
    global_sum.expect(wide.accepts(e), || format!("sum of all A off (d+1)I by {e:e}"));

    let mut from_lines = Audit::new("operators.point_from_lines");
    let inv_d = T::one() / T::from_count(n);
    for a in ops.points() {
        let mut sum = CMatrix::<T>::zeros(n);
        for j in lines_through_point(a.label) {
            sum.axpy(inv_d, &ops.line(j).matrix);
        }
        let e = diff(&sum, &a.matrix);
        from_lines.expect(wide.accepts(e), || format!("A{} from its lines off by {e:e}", a.label));
    }

    let mut ortho = Audit::new("operators.line_trace_orthogonality");
    for p in ops.lines() {
        for q in ops.lines() {
            let t = p.matrix.trace_product(&q.matrix).expect("same dimension");
            let target = if p.label == q.label {
                T::from_count(n)
            } else {
                T::zero()
            };
            let e = (t - Complex::new(target, T::zero())).norm();
            ortho.expect(wide.accepts(e), || format!("tr P{} P{} = {t}", p.label, q.label));
        }
    }

    let mut gram = Audit::new("operators.point_gram_cases");
    for a in ops.points() {
        for b in ops.points() {
            let t = a.matrix.trace_product(&b.matrix).expect("same dimension");
            let target = if a.label == b.label {
                T::one()
            } else if a.label.b == b.label.b {
                T::zero()
            } else {
                inv_d
            };
            let e = (t - Complex::new(target, T::zero())).norm();
            gram.expect(wide.accepts(e), || format!("tr A{} A{} = {t}", a.label, b.label));
        }
    }

    let mut lambda = Audit::new("operators.incidence_trace");
    for a in ops.points() {
        for p in ops.lines() {
            let t = a.matrix.trace_product(&p.matrix).expect("same dimension");
            let target = if incident(a.label, p.label) {
                T::one()
            } else {
                T::zero()
            };
            let e = (t - Complex::new(target, T::zero())).norm();
            lambda.expect(wide.accepts(e), || format!("tr A{} P{} = {t}", a.label, p.label));
        }
    }

    let mut distill = Audit::new("operators.distillation");
    for p in ops.lines() {
        let on_line: Vec<&CMatrix<T>> = line_points(p.label).into_iter().map(|a| &ops.point(a).matrix).collect();
        let mut pairs = CMatrix::<T>::zeros(n);
        let mut singles = CMatrix::<T>::zeros(n);
        for (i, a) in on_line.iter().enumerate() {
            singles = &singles + a;
            for (k, b) in on_line.iter().enumerate() {
                if i != k {
                    pairs = &pairs + &(*a * *b);
                }
            }
        }
        let e = diff(&pairs, &singles);
        distill.expect(wide.accepts(e), || format!("line {}: pair sum off by {e:e}", p.label));
    }

    for audit in [
        herm, projector, column, global_sum, from_lines, trace_one, ortho, involution, gram, lambda, distill, route_a,
        route_p,
    ] {
        report.push(audit.finish());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::omega_power;

    type C = Complex<f64>;

    fn d3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    fn pt(m: i64, b: i64) -> PointLabel {
        PointLabel::from_ints(d3(), m, b).unwrap()
    }

    fn ln(a: i64, b: i64) -> LineLabel {
        LineLabel::from_ints(d3(), a, b).unwrap()
    }

    fn w(k: i64) -> C {
        omega_power(d3(), k)
    }

    fn mat(rows: [[C; 3]; 3], scale: f64) -> CMatrix<f64> {
        CMatrix::from_rows(rows.iter().map(|r| r.iter().map(|z| z * scale).collect()).collect()).unwrap()
    }

    fn assert_close(a: &CMatrix<f64>, b: &CMatrix<f64>) {
        assert!(a.approx_eq(b, Tolerance::default()).unwrap(), "{a:?}\n!=\n{b:?}");
    }

    #[test]
    fn point_operator_fixtures() {
        let (o, z) = (w(0), C::zero());
        assert_close(
            &point_operator(pt(1, -1)).matrix,
            &mat([[z, z, z], [z, o, z], [z, z, z]], 1.0),
        );
        let third = 1.0 / 3.0;
        assert_close(
            &point_operator(pt(2, 0)).matrix,
            &mat([[o, w(2), w(1)], [w(1), o, w(2)], [w(2), w(1), o]], third),
        );
        assert_close(
            &point_operator(pt(1, 1)).matrix,
            &mat([[o, w(1), w(1)], [w(2), o, o], [w(2), o, o]], third),
        );
        assert_close(
            &point_operator(pt(0, 2)).matrix,
            &mat([[o, o, w(1)], [o, o, w(1)], [w(2), w(2), o]], third),
        );
    }

    #[test]
    fn direct_point_operator_examples() {
        let a = point_operator_direct::<f64>(pt(1, 1)).matrix;
        assert!((a[(0, 2)] - w(1) / 3.0).norm() < 1e-12);
        for b in -1..3 {
            for m in 0..3 {
                let a = point_operator_direct::<f64>(pt(m, b)).matrix;
                if b >= 0 {
                    for n in 0..3 {
                        assert!((a[(n, n)] - C::new(1.0 / 3.0, 0.0)).norm() < 1e-12);
                    }
                }
            }
        }
        let z = C::zero();
        assert_close(
            &point_operator_direct(pt(2, -1)).matrix,
            &mat([[z, z, z], [z, z, z], [z, z, w(0)]], 1.0),
        );
    }

    #[test]
    fn line_operator_fixtures() {
        let (o, z) = (w(0), C::zero());
        let p12 = mat([[z, z, w(1)], [z, o, z], [w(2), z, z]], 1.0);
        let p01 = mat([[o, z, z], [z, z, w(1)], [z, w(2), z]], 1.0);
        let p20 = mat([[z, o, z], [o, z, z], [z, z, o]], 1.0);
        assert_close(&line_operator_sum(ln(1, 2)).matrix, &p12);
        assert_close(&line_operator_direct(ln(1, 2)).matrix, &p12);
        assert_close(&line_operator_sum(ln(0, 1)).matrix, &p01);
        assert_close(&line_operator_direct(ln(0, 1)).matrix, &p01);
        assert_close(&line_operator_sum(ln(2, 0)).matrix, &p20);
        assert_close(&line_operator_direct(ln(2, 0)).matrix, &p20);
        assert!((line_operator_direct::<f64>(ln(1, 2)).matrix[(0, 2)] - w(1)).norm() < 1e-12);
        assert!((line_operator_direct::<f64>(ln(0, 1)).matrix[(1, 2)] - w(1)).norm() < 1e-12);
        for j in LineLabel::all(d3()) {
            assert!((line_operator_sum::<f64>(j).matrix.trace() - o).norm() < 1e-12);
        }
    }

    #[test]
    fn worked_pencil_sum() {
        let sum = [ln(0, 1), ln(1, 2), ln(2, 0)]
            .iter()
            .fold(CMatrix::<f64>::zeros(3), |acc, &j| &acc + &line_operator_sum(j).matrix)
            .scale_real(1.0 / 3.0);
        assert_close(&sum, &point_operator(pt(0, 2)).matrix);
    }

    #[test]
    fn gram_cases() {
        assert!((gram_point::<f64>(pt(0, 1), pt(0, 1)) - 1.0).abs() < 1e-12);
        assert!(gram_point::<f64>(pt(0, 1), pt(1, 1)).abs() < 1e-12);
        assert!((gram_point::<f64>(pt(0, 1), pt(1, 2)) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn incidence_trace_cases() {
        assert!((incidence_trace::<f64>(pt(0, 2), ln(1, 2)) - 1.0).abs() < 1e-12);
        assert!(incidence_trace::<f64>(pt(1, 2), ln(1, 2)).abs() < 1e-12);
        for n in [3u64, 5, 7] {
            let d = Modulus::new(n).unwrap();
            for j in LineLabel::all(d) {
                let s: f64 = line_points(j).into_iter().map(|a| incidence_trace::<f64>(a, j)).sum();
                // Σ_{α∈j} tr A_α P_j = tr((P_j + I) P_j) = tr I + tr P_j = d + 1
                let p = line_operator_sum::<f64>(j).matrix;
                let alt = (&p + &CMatrix::identity(n as usize)).trace_product(&p).unwrap().re;
                assert!((s - (n + 1) as f64).abs() < 1e-10 && (alt - s).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn involution_of_worked_line() {
        let p = line_operator_sum::<f64>(ln(1, 2)).matrix;
        assert_close(&(&p * &p), &CMatrix::identity(3));
    }

    #[test]
    fn identities_hold() {
        for n in [3, 5, 7] {
            let r = verify_operator_identities::<f64>(Modulus::new(n).unwrap(), Tolerance::default());
            assert!(r.passed, "{}", r.to_json());
            assert_eq!(r.get("operators.line_involution").unwrap().cases, (n * n) as usize);
        }
    }

    #[test]
    fn single_precision_identities() {
        let r = verify_operator_identities::<f32>(Modulus::new(5).unwrap(), Tolerance::default());
        assert!(r.passed, "{}", r.to_json());
    }

    #[test]
    fn cache_indices_match_labels() {
        let d = Modulus::new(5).unwrap();
        let ops = OperatorSet::<f64>::new(d);
        for a in PointLabel::all(d) {
            assert_eq!(ops.point(a).label, a);
        }
        for j in LineLabel::all(d) {
            assert_eq!(ops.line(j).label, j);
        }
    }
}
