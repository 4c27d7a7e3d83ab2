//! Dual affine plane (DAPG) and affine plane (APG) of prime order d.
//!
//! DAPG points are laid out as a grid of d rows `m` and d+1 columns `b`,
//! where column `b = -1` is the computational basis and columns `0..d` are
//! the remaining mutually unbiased bases. A DAPG line `j = (m(-1), m(0))`
//! picks one row in every column:
//!
//! ```text
//! m(-1) = c/2,    m(b) = (b/2)(c - 1) + m(0)   (mod d, b >= 0)
//! ```
//!
//! Halving is multiplication by `2^{-1}` in Z_d. Exchanging points and lines
//! turns each DAPG line into the APG point `(ξ, η) = (m(-1), m(0))`, and each
//! APG line (`η = rξ + s` or `ξ = s'`) into the single DAPG point shared by
//! the images of its d points.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::modular::{Modulus, ZElem};
use crate::report::{Audit, AxiomReport};

/// Column label. The computational basis is its own variant rather than the
/// residue `d - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Computational,
    Mub(ZElem),
}

impl Basis {
    /// Parses the integer form used in files and on the command line:
    /// `-1` for the computational basis, `0..d` otherwise.
    pub fn from_index(d: Modulus, b: i64) -> Result<Self> {
        match b {
            -1 => Ok(Basis::Computational),
            b if b >= 0 && (b as u64) < d.get() => Ok(Basis::Mub(d.elem(b))),
            _ => Err(Error::InvalidLabel(format!("b={b} for d={d}"))),
        }
    }

    pub fn to_index(self) -> i64 {
        match self {
            Basis::Computational => -1,
            Basis::Mub(b) => b.value() as i64,
        }
    }

    /// Position of the column in `-1, 0, .., d-1` order, starting at 0.
    pub fn ordinal(self) -> usize {
        (self.to_index() + 1) as usize
    }

    /// All d+1 columns in ascending order.
    pub fn all(d: Modulus) -> impl Iterator<Item = Basis> + Clone {
        std::iter::once(Basis::Computational).chain(d.residues().map(Basis::Mub))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_index())
    }
}

/// DAPG point `α = (m, b)`: state `m` of basis `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointLabel {
    pub m: ZElem,
    pub b: Basis,
}

impl PointLabel {
    pub fn new(m: ZElem, b: Basis) -> Self {
        PointLabel { m, b }
    }

    /// From integer coordinates, with `b = -1` for the computational basis.
    pub fn from_ints(d: Modulus, m: i64, b: i64) -> Result<Self> {
        if m < 0 || m as u64 >= d.get() {
            return Err(Error::InvalidLabel(format!("m={m} for d={d}")));
        }
        Ok(PointLabel {
            m: d.elem(m),
            b: Basis::from_index(d, b)?,
        })
    }

    pub fn modulus(self) -> Modulus {
        self.m.modulus()
    }

    /// Dense index, column-major: `ordinal(b) * d + m`.
    pub fn index(self) -> usize {
        self.b.ordinal() * self.modulus().dim() + self.m.index()
    }

    /// Every point, column by column, ascending `m` within a column.
    pub fn all(d: Modulus) -> impl Iterator<Item = PointLabel> + Clone {
        Basis::all(d).flat_map(move |b| d.residues().map(move |m| PointLabel { m, b }))
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.b)
    }
}

/// DAPG line `j = (m(-1), m(0))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineLabel {
    pub m_minus1: ZElem,
    pub m0: ZElem,
}

impl LineLabel {
    pub fn new(m_minus1: ZElem, m0: ZElem) -> Self {
        LineLabel { m_minus1, m0 }
    }

    pub fn from_ints(d: Modulus, m_minus1: i64, m0: i64) -> Result<Self> {
        for v in [m_minus1, m0] {
            if v < 0 || v as u64 >= d.get() {
                return Err(Error::InvalidLabel(format!("j=({m_minus1},{m0}) for d={d}")));
            }
        }
        Ok(LineLabel {
            m_minus1: d.elem(m_minus1),
            m0: d.elem(m0),
        })
    }

    pub fn modulus(self) -> Modulus {
        self.m0.modulus()
    }

    /// Lexicographic index `m(-1) * d + m(0)`.
    pub fn index(self) -> usize {
        self.m_minus1.index() * self.modulus().dim() + self.m0.index()
    }

    /// `c = 2 m(-1)`, the anti-diagonal `n + n' = c` carrying the line operator.
    pub fn c(self) -> ZElem {
        self.m_minus1 + self.m_minus1
    }

    /// Row of this line in column `b`.
    pub fn row_at(self, b: Basis) -> ZElem {
        match b {
            Basis::Computational => self.m_minus1,
            Basis::Mub(b) => {
                let one = b.modulus().elem(1);
                b.half() * (self.c() - one) + self.m0
            }
        }
    }

    /// All d² lines in lexicographic `(m(-1), m(0))` order.
    pub fn all(d: Modulus) -> impl Iterator<Item = LineLabel> + Clone {
        d.residues()
            .flat_map(move |a| d.residues().map(move |b| LineLabel { m_minus1: a, m0: b }))
    }

    /// The APG point this line becomes under duality.
    pub fn to_apg(self) -> ApgPoint {
        ApgPoint {
            xi: self.m_minus1,
            eta: self.m0,
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m_minus1, self.m0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ApgPoint {
    pub xi: ZElem,
    pub eta: ZElem,
}

impl ApgPoint {
    pub fn to_dapg_line(self) -> LineLabel {
        LineLabel {
            m_minus1: self.xi,
            m0: self.eta,
        }
    }

    pub fn all(d: Modulus) -> impl Iterator<Item = ApgPoint> + Clone {
        LineLabel::all(d).map(LineLabel::to_apg)
    }
}

impl fmt::Display for ApgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.xi, self.eta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ApgLine {
    /// `η = rξ + s`
    Sloped { r: ZElem, s: ZElem },
    /// `ξ = s'`
    Vertical { s_prime: ZElem },
}

impl ApgLine {
    /// All d(d+1) lines: sloped lines ordered by `(r, s)`, then verticals.
    pub fn all(d: Modulus) -> impl Iterator<Item = ApgLine> + Clone {
        let sloped = d
            .residues()
            .flat_map(move |r| d.residues().map(move |s| ApgLine::Sloped { r, s }));
        sloped.chain(d.residues().map(|s_prime| ApgLine::Vertical { s_prime }))
    }

    pub fn contains(self, p: ApgPoint) -> bool {
        match self {
            ApgLine::Sloped { r, s } => p.eta == r * p.xi + s,
            ApgLine::Vertical { s_prime } => p.xi == s_prime,
        }
    }

    /// Lines sharing a direction share this key.
    pub fn direction(self) -> Option<ZElem> {
        match self {
            ApgLine::Sloped { r, .. } => Some(r),
            ApgLine::Vertical { .. } => None,
        }
    }
}

impl fmt::Display for ApgLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApgLine::Sloped { r, s } => write!(f, "eta={r}*xi+{s}"),
            ApgLine::Vertical { s_prime } => write!(f, "xi={s_prime}"),
        }
    }
}

/// The d+1 points of `j`: the computational-basis point first, then `b = 0..d`.
pub fn line_points(j: LineLabel) -> Vec<PointLabel> {
    Basis::all(j.modulus())
        .map(|b| PointLabel { m: j.row_at(b), b })
        .collect()
}

pub fn incident(alpha: PointLabel, j: LineLabel) -> bool {
    j.row_at(alpha.b) == alpha.m
}

/// The d lines through `alpha`, in lexicographic order.
pub fn lines_through_point(alpha: PointLabel) -> Vec<LineLabel> {
    let d = alpha.modulus();
    match alpha.b {
        Basis::Computational => d.residues().map(|m0| LineLabel::new(alpha.m, m0)).collect(),
        Basis::Mub(b) => {
            // m = (b/2)(2 m(-1) - 1) + m(0), solved for m(0)
            let one = d.elem(1);
            d.residues()
                .map(|mm1| {
                    let m0 = alpha.m - b.half() * (mm1 + mm1 - one);
                    LineLabel::new(mm1, m0)
                })
                .collect()
        }
    }
}

/// Column `b`: d points no two of which share a line.
pub fn parallel_class(d: Modulus, b: Basis) -> Vec<PointLabel> {
    d.residues().map(|m| PointLabel { m, b }).collect()
}

pub fn apg_line_points(d: Modulus, line: ApgLine) -> Vec<ApgPoint> {
    match line {
        ApgLine::Sloped { r, s } => d.residues().map(|xi| ApgPoint { xi, eta: r * xi + s }).collect(),
        ApgLine::Vertical { s_prime } => d.residues().map(|eta| ApgPoint { xi: s_prime, eta }).collect(),
    }
}

/// DAPG point shared by the d DAPG lines that are the images of the points
/// of `line`. A sloped line `η = rξ + s` maps to `(s + r/2, -r)`, a vertical
/// line `ξ = s'` to `(s', -1)`.
pub fn duality_common_point(d: Modulus, line: ApgLine) -> Result<PointLabel> {
    let candidate = match line {
        ApgLine::Vertical { s_prime } => PointLabel::new(s_prime, Basis::Computational),
        ApgLine::Sloped { r, s } => PointLabel::new(s + r.half(), Basis::Mub(-r)),
    };
    let all_incident = apg_line_points(d, line)
        .into_iter()
        .all(|p| incident(candidate, p.to_dapg_line()));
    if all_incident {
        Ok(candidate)
    } else {
        Err(Error::NoCommonPoint(line.to_string()))
    }
}

/// Dense line × point incidence table built from an arbitrary line map.
struct Incidence {
    lines: Vec<LineLabel>,
    points: Vec<PointLabel>,
    table: Vec<bool>,
}

impl Incidence {
    fn build(d: Modulus, line_fn: &dyn Fn(LineLabel) -> Vec<PointLabel>) -> (Self, Vec<Vec<PointLabel>>) {
        let lines: Vec<_> = LineLabel::all(d).collect();
        let points: Vec<_> = PointLabel::all(d).collect();
        let mut table = vec![false; lines.len() * points.len()];
        let mut members = Vec::with_capacity(lines.len());
        for (li, &j) in lines.iter().enumerate() {
            let pts = line_fn(j);
            for p in &pts {
                table[li * points.len() + p.index()] = true;
            }
            members.push(pts);
        }
        (Incidence { lines, points, table }, members)
    }

    fn on(&self, line: usize, point: usize) -> bool {
        self.table[line * self.points.len() + point]
    }

    fn common_lines(&self, p: usize, q: usize) -> usize {
        (0..self.lines.len())
            .filter(|&l| self.on(l, p) && self.on(l, q))
            .count()
    }

    fn common_points(&self, l: usize, k: usize) -> usize {
        (0..self.points.len())
            .filter(|&p| self.on(l, p) && self.on(k, p))
            .count()
    }
}

/// Exhaustive audit of the dual affine plane built from the line equation.
pub fn verify_dapg_axioms(d: Modulus) -> AxiomReport {
    audit_dapg(d, &line_points)
}

pub(crate) fn audit_dapg(d: Modulus, line_fn: &dyn Fn(LineLabel) -> Vec<PointLabel>) -> AxiomReport {
    let (inc, members) = Incidence::build(d, line_fn);
    let n = d.dim();
    let mut report = AxiomReport::new(d.get());

    let mut counts = Audit::new("dapg.a.counts");
    let distinct_lines: BTreeSet<BTreeSet<PointLabel>> = members.iter().map(|m| m.iter().copied().collect()).collect();
    counts.expect(distinct_lines.len() == n * n, || {
        format!("{} distinct lines, expected {}", distinct_lines.len(), n * n)
    });
    let covered: BTreeSet<PointLabel> = members.iter().flatten().copied().collect();
    counts.expect(covered.len() == n * (n + 1), || {
        format!("{} points covered, expected {}", covered.len(), n * (n + 1))
    });
    report.push(counts.finish());

    let mut two_points = Audit::new("dapg.b.points_determine_line");
    let mut two_lines = Audit::new("dapg.b.lines_share_one_point");
    let mut same_column = Audit::new("dapg.d.column_points_disjoint");
    for p in 0..inc.points.len() {
        for q in p + 1..inc.points.len() {
            let (a, b) = (inc.points[p], inc.points[q]);
            let shared = inc.common_lines(p, q);
            if a.b == b.b {
                same_column.expect(shared == 0, || format!("{a} and {b} share {shared} lines"));
            } else {
                two_points.expect(shared == 1, || format!("{a} and {b} share {shared} lines"));
            }
        }
    }
    for l in 0..inc.lines.len() {
        for k in l + 1..inc.lines.len() {
            let shared = inc.common_points(l, k);
            two_lines.expect(shared == 1, || {
                format!("lines {} and {} share {shared} points", inc.lines[l], inc.lines[k])
            });
        }
    }

    let mut degree = Audit::new("dapg.c.degrees");
    for (l, pts) in members.iter().enumerate() {
        let distinct: BTreeSet<_> = pts.iter().collect();
        degree.expect(distinct.len() == n + 1 && pts.len() == n + 1, || {
            format!("line {} has {} points", inc.lines[l], distinct.len())
        });
        let columns: BTreeSet<_> = pts.iter().map(|p| p.b).collect();
        degree.expect(columns.len() == n + 1, || {
            format!("line {} repeats a column", inc.lines[l])
        });
    }
    for (p, &alpha) in inc.points.iter().enumerate() {
        let through: Vec<LineLabel> = (0..inc.lines.len())
            .filter(|&l| inc.on(l, p))
            .map(|l| inc.lines[l])
            .collect();
        degree.expect(through.len() == n, || {
            format!("point {alpha} lies on {} lines", through.len())
        });
        degree.expect(through == lines_through_point(alpha), || {
            format!("lines_through_point{alpha} disagrees with incidence scan")
        });
    }
    report.push(two_points.finish());
    report.push(two_lines.finish());
    report.push(degree.finish());

    let mut classes = Audit::new("dapg.d.parallel_classes");
    let mut seen = BTreeSet::new();
    for b in Basis::all(d) {
        let class = parallel_class(d, b);
        classes.expect(class.len() == n, || format!("column {b} has {} points", class.len()));
        for p in class {
            classes.expect(seen.insert(p), || format!("{p} appears in two columns"));
        }
    }
    classes.expect(seen.len() == n * (n + 1), || {
        format!("columns cover {} points", seen.len())
    });
    report.push(classes.finish());
    report.push(same_column.finish());

    let mut connected = Audit::new("dapg.e.cross_column_connected");
    for p in 0..inc.points.len() {
        for q in 0..inc.points.len() {
            let (a, b) = (inc.points[p], inc.points[q]);
            if a.b != b.b {
                connected.expect(inc.common_lines(p, q) >= 1, || format!("{a} not connected to {b}"));
            }
        }
    }
    report.push(connected.finish());

    report
}

/// Exhaustive audit of the APG realization `η = rξ + s`, `ξ = s'`.
pub fn verify_apg_axioms(d: Modulus) -> AxiomReport {
    let n = d.dim();
    let points: Vec<ApgPoint> = ApgPoint::all(d).collect();
    let lines: Vec<ApgLine> = ApgLine::all(d).collect();
    let members: Vec<BTreeSet<ApgPoint>> = lines
        .iter()
        .map(|&l| apg_line_points(d, l).into_iter().collect())
        .collect();
    let meets: Vec<usize> = (0..lines.len())
        .flat_map(|a| (0..lines.len()).map(move |b| (a, b)))
        .map(|(a, b)| members[a].intersection(&members[b]).count())
        .collect();
    let meet = |a: usize, b: usize| meets[a * lines.len() + b];
    let mut report = AxiomReport::new(d.get());

    let mut counts = Audit::new("apg.a.counts");
    counts.expect(points.len() == n * n, || format!("{} points", points.len()));
    let distinct: BTreeSet<_> = members.iter().cloned().collect();
    counts.expect(distinct.len() == n * (n + 1), || {
        format!("{} distinct lines", distinct.len())
    });
    for (l, m) in members.iter().enumerate() {
        counts.expect(m.iter().all(|&p| lines[l].contains(p)), || {
            format!("line {} lists a point off the line", lines[l])
        });
    }
    report.push(counts.finish());

    let mut join = Audit::new("apg.1.unique_joining_line");
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            let k = members.iter().filter(|m| m.contains(&p) && m.contains(&q)).count();
            join.expect(k == 1, || format!("{p} and {q} lie on {k} common lines"));
        }
    }
    report.push(join.finish());

    let mut parallel = Audit::new("apg.2.parallel_postulate");
    for (l, line) in lines.iter().enumerate() {
        for &s in &points {
            if members[l].contains(&s) {
                continue;
            }
            let k = (0..lines.len())
                .filter(|&o| members[o].contains(&s) && meet(l, o) == 0)
                .count();
            parallel.expect(k == 1, || format!("{k} parallels to {line} through {s}"));
        }
    }
    report.push(parallel.finish());

    let mut noncollinear = Audit::new("apg.3.noncollinear_triple");
    let (o, x, y) = (points[0], points[n], points[1]);
    let collinear = members
        .iter()
        .any(|m| m.contains(&o) && m.contains(&x) && m.contains(&y));
    noncollinear.expect(!collinear, || format!("{o}, {x}, {y} are collinear"));
    report.push(noncollinear.finish());

    let mut degree = Audit::new("apg.c.degrees");
    for (l, m) in members.iter().enumerate() {
        degree.expect(m.len() == n, || format!("line {} has {} points", lines[l], m.len()));
    }
    for &p in &points {
        let k = members.iter().filter(|m| m.contains(&p)).count();
        degree.expect(k == n + 1, || format!("point {p} lies on {k} lines"));
    }
    report.push(degree.finish());

    // parallelism (equal or disjoint) must be an equivalence with d+1 classes of d lines
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for l in 0..lines.len() {
        match classes.iter_mut().find(|c| meet(c[0], l) == 0) {
            Some(c) => c.push(l),
            None => classes.push(vec![l]),
        }
    }
    let mut grouping = Audit::new("apg.d.parallel_classes");
    grouping.expect(classes.len() == n + 1, || format!("{} parallel classes", classes.len()));
    for c in &classes {
        grouping.expect(c.len() == n, || {
            format!("class of {} has {} lines", lines[c[0]], c.len())
        });
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                grouping.expect(meet(a, b) == 0, || format!("{} meets {}", lines[a], lines[b]));
                grouping.expect(lines[a].direction() == lines[b].direction(), || {
                    format!("{} and {} differ in direction", lines[a], lines[b])
                });
            }
        }
    }
    report.push(grouping.finish());

    let mut cross = Audit::new("apg.e.cross_class_single_intersection");
    for (ci, c) in classes.iter().enumerate() {
        for other in &classes[ci + 1..] {
            for &a in c {
                for &b in other {
                    let k = meet(a, b);
                    cross.expect(k == 1, || format!("{} and {} meet in {k} points", lines[a], lines[b]));
                }
            }
        }
    }
    report.push(cross.finish());
    report
}

/// Checks that the APG and DAPG realizations are dual to each other.
pub fn verify_duality(d: Modulus) -> AxiomReport {
    let n = d.dim();
    let mut report = AxiomReport::new(d.get());
    let lines: Vec<ApgLine> = ApgLine::all(d).collect();

    let mut common = Audit::new("duality.common_point");
    let mut images = Vec::with_capacity(lines.len());
    for &line in &lines {
        // brute-force intersection of the image lines' point sets
        let mut shared: Option<BTreeSet<PointLabel>> = None;
        for p in apg_line_points(d, line) {
            let pts: BTreeSet<_> = line_points(p.to_dapg_line()).into_iter().collect();
            shared = Some(match shared {
                None => pts,
                Some(acc) => acc.intersection(&pts).copied().collect(),
            });
        }
        let shared = shared.unwrap_or_default();
        match duality_common_point(d, line) {
            Ok(alpha) => {
                common.expect(shared.len() == 1 && shared.contains(&alpha), || {
                    format!("{line}: formula gives {alpha}, scan gives {shared:?}")
                });
                images.push(alpha);
            }
            Err(e) => common.expect(false, || e.to_string()),
        }
    }
    report.push(common.finish());

    let mut bijection = Audit::new("duality.bijection");
    let distinct: BTreeSet<_> = images.iter().collect();
    bijection.expect(images.len() == n * (n + 1) && distinct.len() == images.len(), || {
        format!("{} distinct images of {} lines", distinct.len(), lines.len())
    });
    report.push(bijection.finish());

    let mut columns = Audit::new("duality.parallel_class_to_column");
    for (&line, &alpha) in lines.iter().zip(&images) {
        let expected = match line.direction() {
            Some(r) => Basis::Mub(-r),
            None => Basis::Computational,
        };
        columns.expect(alpha.b == expected, || {
            format!("{line} maps to {alpha}, expected column {expected}")
        });
    }
    report.push(columns.finish());

    let mut pencil = Audit::new("duality.pencil_is_line");
    for p in ApgPoint::all(d) {
        let through: BTreeSet<PointLabel> = lines
            .iter()
            .zip(&images)
            .filter(|(l, _)| l.contains(p))
            .map(|(_, &a)| a)
            .collect();
        let expected: BTreeSet<PointLabel> = line_points(p.to_dapg_line()).into_iter().collect();
        pencil.expect(through == expected, || format!("pencil at {p} maps to {through:?}"));
    }
    report.push(pencil.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn pt(dm: Modulus, m: i64, b: i64) -> PointLabel {
        PointLabel::from_ints(dm, m, b).unwrap()
    }

    fn ln(dm: Modulus, a: i64, b: i64) -> LineLabel {
        LineLabel::from_ints(dm, a, b).unwrap()
    }

    #[test]
    fn worked_line_example() {
        let d3 = d(3);
        let pts = line_points(ln(d3, 1, 2));
        assert_eq!(pts, vec![pt(d3, 1, -1), pt(d3, 2, 0), pt(d3, 1, 1), pt(d3, 0, 2)]);
        assert_eq!(ln(d3, 1, 2).row_at(Basis::Mub(d3.elem(1))).value(), 1);
    }

    #[test]
    fn origin_line() {
        let d3 = d(3);
        let pts = line_points(ln(d3, 0, 0));
        assert_eq!(pts, vec![pt(d3, 0, -1), pt(d3, 0, 0), pt(d3, 1, 1), pt(d3, 2, 2)]);
        // brute-force scan over the whole grid
        let scanned: Vec<_> = PointLabel::all(d3).filter(|&a| incident(a, ln(d3, 0, 0))).collect();
        assert_eq!(scanned, pts);
    }

    #[test]
    fn incidence_examples() {
        let d3 = d(3);
        assert!(incident(pt(d3, 0, 2), ln(d3, 1, 2)));
        assert!(!incident(pt(d3, 1, 2), ln(d3, 1, 2)));
        assert!(incident(pt(d3, 1, -1), ln(d3, 1, 0)));
    }

    #[test]
    fn lines_through_examples() {
        let d3 = d(3);
        assert_eq!(
            lines_through_point(pt(d3, 0, 2)),
            vec![ln(d3, 0, 1), ln(d3, 1, 2), ln(d3, 2, 0)]
        );
        assert_eq!(
            lines_through_point(pt(d3, 1, -1)),
            vec![ln(d3, 1, 0), ln(d3, 1, 1), ln(d3, 1, 2)]
        );
        for n in [3, 5, 7, 11] {
            for a in PointLabel::all(d(n)) {
                let ls = lines_through_point(a);
                let set: BTreeSet<_> = ls.iter().collect();
                assert_eq!(set.len(), n as usize);
                assert!(ls.iter().all(|&j| incident(a, j)));
            }
        }
    }

    #[test]
    fn parallel_class_examples() {
        let d3 = d(3);
        assert_eq!(
            parallel_class(d3, Basis::Computational),
            vec![pt(d3, 0, -1), pt(d3, 1, -1), pt(d3, 2, -1)]
        );
        let all: BTreeSet<_> = Basis::all(d3).flat_map(|b| parallel_class(d3, b)).collect();
        assert_eq!(all.len(), 12);
        let a: BTreeSet<_> = parallel_class(d3, Basis::Mub(d3.elem(0))).into_iter().collect();
        let b: BTreeSet<_> = parallel_class(d3, Basis::Mub(d3.elem(2))).into_iter().collect();
        assert!(a.is_disjoint(&b));
    }

    #[test]
    fn apg_line_examples() {
        let d3 = d(3);
        let e = |x, y| ApgPoint {
            xi: d3.elem(x),
            eta: d3.elem(y),
        };
        let sloped = ApgLine::Sloped {
            r: d3.elem(1),
            s: d3.elem(1),
        };
        assert_eq!(apg_line_points(d3, sloped), vec![e(0, 1), e(1, 2), e(2, 0)]);
        let vertical = ApgLine::Vertical { s_prime: d3.elem(2) };
        assert_eq!(apg_line_points(d3, vertical), vec![e(2, 0), e(2, 1), e(2, 2)]);
        let a: BTreeSet<_> = apg_line_points(
            d3,
            ApgLine::Sloped {
                r: d3.elem(2),
                s: d3.elem(0),
            },
        )
        .into_iter()
        .collect();
        let b: BTreeSet<_> = apg_line_points(
            d3,
            ApgLine::Sloped {
                r: d3.elem(2),
                s: d3.elem(1),
            },
        )
        .into_iter()
        .collect();
        assert!(a.is_disjoint(&b));
    }

    #[test]
    fn common_point_examples() {
        let d3 = d(3);
        let sloped = ApgLine::Sloped {
            r: d3.elem(1),
            s: d3.elem(1),
        };
        assert_eq!(duality_common_point(d3, sloped).unwrap(), pt(d3, 0, 2));
        let vertical = ApgLine::Vertical { s_prime: d3.elem(2) };
        assert_eq!(duality_common_point(d3, vertical).unwrap(), pt(d3, 2, -1));
        let flat = ApgLine::Sloped {
            r: d3.elem(0),
            s: d3.elem(1),
        };
        assert_eq!(duality_common_point(d3, flat).unwrap(), pt(d3, 1, 0));
    }

    #[test]
    fn slope_class_lands_in_one_column() {
        let d5 = d(5);
        for r in d5.residues() {
            let pts: BTreeSet<_> = d5
                .residues()
                .map(|s| duality_common_point(d5, ApgLine::Sloped { r, s }).unwrap())
                .collect();
            assert_eq!(pts.len(), 5);
            assert!(pts.iter().all(|p| p.b == Basis::Mub(-r)));
        }
    }

    #[test]
    fn verifiers_pass_small_orders() {
        for n in [3, 5, 7] {
            for r in [verify_dapg_axioms(d(n)), verify_apg_axioms(d(n)), verify_duality(d(n))] {
                assert!(r.passed, "{}", r.to_json());
            }
        }
    }

    #[test]
    fn dapg_audit_catches_broken_lines() {
        let d3 = d(3);
        // move the b=2 point of every line one row down
        let broken = |j: LineLabel| {
            let mut pts = line_points(j);
            let last = pts.last_mut().unwrap();
            last.m = last.m + d3.elem(j.m0.value() as i64 % 2);
            pts
        };
        let report = audit_dapg(d3, &broken);
        assert!(!report.passed);
        assert!(report.failures().next().is_some());
    }

    #[test]
    fn same_column_points_never_share_a_line() {
        let d3 = d(3);
        let report = verify_dapg_axioms(d3);
        let c = report.get("dapg.d.column_points_disjoint").unwrap();
        assert!(c.ok);
        // 4 columns, C(3,2) pairs each
        assert_eq!(c.cases, 12);
    }

    #[test]
    fn label_parsing_bounds() {
        let d3 = d(3);
        assert!(PointLabel::from_ints(d3, 3, 0).is_err());
        assert!(PointLabel::from_ints(d3, 0, 3).is_err());
        assert!(PointLabel::from_ints(d3, 0, -2).is_err());
        assert!(LineLabel::from_ints(d3, -1, 0).is_err());
        assert_eq!(Basis::from_index(d3, -1).unwrap(), Basis::Computational);
    }

    #[test]
    fn dense_indices_are_a_bijection() {
        let d5 = d(5);
        let pi: BTreeSet<_> = PointLabel::all(d5).map(PointLabel::index).collect();
        assert_eq!(pi, (0..30).collect());
        let li: Vec<_> = LineLabel::all(d5).map(LineLabel::index).collect();
        assert_eq!(li, (0..25).collect::<Vec<_>>());
    }
}
