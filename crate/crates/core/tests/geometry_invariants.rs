use std::collections::BTreeSet;

use mubgeo::geometry::{duality_common_point, incident, line_points, lines_through_point, ApgLine, ApgPoint};
use mubgeo::{LineLabel, Modulus, PointLabel};

const ORDERS: [u64; 3] = [3, 5, 7];

#[test]
fn distinct_lines_meet_once() {
    for n in ORDERS {
        let d = Modulus::new(n).unwrap();
        let sets: Vec<BTreeSet<PointLabel>> = LineLabel::all(d)
            .map(|j| line_points(j).into_iter().collect())
            .collect();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                assert_eq!(a.intersection(b).count(), 1);
            }
        }
    }
}

#[test]
fn point_pairs_share_lines_by_column() {
    for n in ORDERS {
        let d = Modulus::new(n).unwrap();
        let points: Vec<_> = PointLabel::all(d).collect();
        for &p in &points {
            for &q in &points {
                if p == q {
                    continue;
                }
                let shared = LineLabel::all(d).filter(|&j| incident(p, j) && incident(q, j)).count();
                let expected = if p.b == q.b { 0 } else { 1 };
                assert_eq!(shared, expected, "{p} {q}");
            }
        }
    }
}

#[test]
fn lines_through_point_agree_with_incidence() {
    for n in ORDERS {
        let d = Modulus::new(n).unwrap();
        for a in PointLabel::all(d) {
            let by_scan: Vec<_> = LineLabel::all(d).filter(|&j| incident(a, j)).collect();
            assert_eq!(lines_through_point(a), by_scan);
            for j in &by_scan {
                assert!(line_points(*j).contains(&a));
            }
        }
    }
}

#[test]
fn pencil_maps_onto_dapg_line() {
    for n in ORDERS {
        let d = Modulus::new(n).unwrap();
        for p in ApgPoint::all(d) {
            let images: Vec<PointLabel> = ApgLine::all(d)
                .filter(|l| l.contains(p))
                .map(|l| duality_common_point(d, l).unwrap())
                .collect();
            assert_eq!(images.len(), n as usize + 1);
            let columns: BTreeSet<_> = images.iter().map(|a| a.b).collect();
            assert_eq!(columns.len(), n as usize + 1);
            let got: BTreeSet<_> = images.into_iter().collect();
            let want: BTreeSet<_> = line_points(p.to_dapg_line()).into_iter().collect();
            assert_eq!(got, want);
        }
    }
}
