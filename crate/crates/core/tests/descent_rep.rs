use hopf_core::combinatorics::{Composition, Partition};
use hopf_core::descent_rep::*;
use hopf_core::exact::{int, QPoly};
use hopf_core::nsym::{dnk_dim, increasing, zassenhaus, Nsf};

fn lab(s: &str) -> Partition {
    Partition::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect())
}

fn grid(rows: &[&str]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.split_whitespace().map(String::from).collect()).collect()
}

pub fn printed_d0(n: usize) -> (Vec<&'static str>, Vec<Vec<String>>) {
    match n {
        5 => (vec!["5", "32"], grid(&["1 q", ". 1"])),
        6 => (vec!["6", "42", "33", "222"], grid(&["1 q . .", ". 1 . .", ". . 1 .", ". . . 1"])),
        7 => (vec!["7", "52", "43", "322"], grid(&["1 q q q^2", ". 1 . q", ". . 1 .", ". . . 1"])),
        8 => (
            vec!["8", "62", "53", "44", "422", "332", "2222"],
            grid(&[
                "1 q q . q^2 q^2 .",
                ". 1 . . q . .",
                ". . 1 . . q .",
                ". . . 1 . . .",
                ". . . . 1 . .",
                ". . . . . 1 .",
                ". . . . . . 1",
            ]),
        ),
        9 => (
            vec!["9", "72", "63", "54", "522", "432", "333", "3222"],
            grid(&[
                "1 q q q q^2 2q^2 . q^3",
                ". 1 . . q q . q^2",
                ". . 1 . . q . .",
                ". . . 1 . q . .",
                ". . . . 1 . . q",
                ". . . . . 1 . .",
                ". . . . . . 1 .",
                ". . . . . . . 1",
            ]),
        ),
        _ => unreachable!(),
    }
}

#[test]
fn printed_d0_matrices_5_to_8() {
    for n in 5..=8 {
        let m = cartan_d0(n).unwrap();
        let (labels, cells) = printed_d0(n);
        let got: Vec<String> = m.labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(got, labels, "labels n = {n}");
        assert_eq!(m.cells(), cells, "n = {n}");
        assert!(m.is_upper_triangular());
    }
}

#[test]
fn small_d0_is_trivial() {
    for n in 0..=4 {
        let m = cartan_d0(n).unwrap();
        assert_eq!(m.size() as u64, dnk_dim(n, Some(0)));
        for (r, row) in m.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                assert_eq!(*e, if r == c { QPoly::one() } else { QPoly::zero() });
            }
        }
    }
}

#[test]
fn span_and_lie_methods_agree() {
    for n in 0..=8 {
        assert_eq!(cartan_d0(n).unwrap(), cartan_d0_lie(n), "D0 n = {n}");
    }
    for n in 1..=6 {
        assert_eq!(cartan_sym(n).unwrap(), cartan_sym_lie(n), "Sym n = {n}");
    }
}

#[test]
fn sym_small_cases() {
    let m = cartan_sym(3).unwrap();
    let labels: Vec<String> = m.labels.iter().map(|l| l.to_string()).collect();
    assert_eq!(labels, ["3", "21", "111"]);
    for (r, row) in m.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let want = if r == c {
                QPoly::one()
            } else if (r, c) == (0, 1) {
                QPoly::q()
            } else {
                QPoly::zero()
            };
            assert_eq!(*e, want);
        }
    }
    assert_eq!(cartan_sym(1).unwrap().entries, vec![vec![QPoly::one()]]);
    // simple modules are one-dimensional, so the entries add up to the dimension
    for n in 1..=7 {
        assert_eq!(cartan_sym_lie(n).total().eval(&int(1)), int(1 << (n - 1)));
    }
}

#[test]
fn dk_labels_and_constructions() {
    let l: Vec<String> = dk_labels(5, Some(3)).iter().map(|l| l.to_string()).collect();
    assert_eq!(l, ["5", "32", "41", "221", "311", "2111"]);
    for n in 0..=7 {
        assert_eq!(cartan_dk(n, Some(0)).unwrap(), cartan_d0(n).unwrap());
        let sym = cartan_sym_lie(n);
        for k in [Some(0), Some(1), Some(2), Some(3), None] {
            let a = cartan_dk(n, k).unwrap();
            assert_eq!(a, cartan_dk_from_sym(&sym, k), "n = {n} k = {k:?}");
            assert_eq!(a.total().eval(&int(1)), int(dnk_dim(n, k) as i64));
        }
    }
}

#[test]
fn dk_constructions_agree_with_span_sym() {
    for n in 1..=7 {
        let sym = cartan_sym(n).unwrap();
        for k in [Some(0), Some(1), Some(2), None] {
            assert_eq!(cartan_dk(n, k).unwrap(), cartan_dk_from_sym(&sym, k), "n = {n} k = {k:?}");
        }
    }
}

#[test]
fn p_finer_rule() {
    for n in 1..=8 {
        let m = cartan_sym_lie(n);
        for (r, mu) in m.labels.iter().enumerate() {
            for (c, lam) in m.labels.iter().enumerate() {
                if !lam.p_finer(mu) {
                    assert!(m.entries[r][c].is_zero(), "n = {n}: {lam} {mu}");
                }
            }
        }
    }
    for n in 2..=7 {
        let m = cartan_d0(n).unwrap();
        for (r, mu) in m.labels.iter().enumerate() {
            for (c, lam) in m.labels.iter().enumerate() {
                if !lam.p_finer(mu) {
                    assert!(m.entries[r][c].is_zero());
                }
            }
        }
    }
}

#[test]
fn projective_dimensions() {
    for n in 0..=8 {
        let total: usize =
            Partition::all_without_ones(n).iter().map(|l| l.as_composition().rearrangements().len()).sum();
        assert_eq!(total as u64, dnk_dim(n, Some(0)));
    }
}

#[test]
fn quivers() {
    let q5 = quiver(Algebra::D0, 5).unwrap();
    assert_eq!(q5.arrows, vec![(lab("32"), lab("5"))]);
    assert_eq!(quiver(Algebra::D0, 6).unwrap().arrows, vec![(lab("42"), lab("6"))]);
    assert!(quiver(Algebra::D0, 4).unwrap().arrows.is_empty());
    for n in 2..=8 {
        let a = quiver_from_cartan(&cartan_dk(n, None).unwrap()).arrows.len();
        let b = quiver_by_merging(&Partition::all(n - 2)).arrows.len();
        assert_eq!(a, b, "n = {n}");
        quiver(Algebra::Dk(None), n).unwrap();
    }
    for n in 1..=6 {
        quiver(Algebra::Sym, n).unwrap();
    }
}

pub const TRIANGLE: [&[i64]; 16] = [
    &[1],
    &[2],
    &[3],
    &[5],
    &[7, 1],
    &[11, 2],
    &[15, 5, 1],
    &[22, 9, 3],
    &[30, 17, 7, 1],
    &[42, 28, 16, 3],
    &[56, 47, 31, 9, 1],
    &[77, 73, 58, 21, 4],
    &[101, 114, 102, 47, 12, 1],
    &[135, 170, 175, 94, 32, 4],
    &[176, 253, 286, 183, 74, 14, 1],
    &[231, 365, 461, 333, 162, 40, 5],
];

/// Partitions of n with two kinds of parts 1 and 2, from the product formula.
fn two_kinds(n: usize) -> i64 {
    let mut a = vec![0i64; n + 1];
    a[0] = 1;
    let mut factors: Vec<usize> = vec![1, 1, 2, 2];
    factors.extend(3..=n);
    for k in factors {
        for i in k..=n {
            a[i] += a[i - k];
        }
    }
    a[n]
}

#[test]
fn q_dimension_triangle() {
    let polys = q_dimension_polynomials(16);
    let rows = triangle_rows(&polys);
    for (n, (row, want)) in rows.iter().zip(TRIANGLE).enumerate() {
        assert_eq!(row.as_slice(), want, "n = {}", n + 1);
        assert_eq!(row.iter().sum::<i64>() as u64, dnk_dim(n + 1, None));
        assert_eq!(row[0] as usize, Partition::count(n + 1));
    }
    for n in 5..=16 {
        assert_eq!(rows[n - 1][1], two_kinds(n - 5), "n = {n}");
    }
    assert_eq!(polys[4].to_string(), "q+7");
    assert_eq!(polys[7].to_string(), "3q^2+9q+22");
    // the span method agrees on the blocks it can reach
    for n in 1..=8 {
        assert_eq!(cartan_dk(n, None).unwrap().total(), polys[n - 1]);
    }
}

#[test]
fn radical_filtration() {
    for n in 1..=6 {
        let d = radical_filtration_oracle(n, 3).unwrap();
        assert_eq!(d[0], 1 << (n - 1));
        assert_eq!(d[1], (1 << (n - 1)) - Partition::count(n));
        assert!(d.windows(2).all(|w| w[0] >= w[1]));
    }
    assert!(radical_filtration_oracle(7, 1).is_err());
    // e_μ * e_I lies exactly in layer ℓ(λ) - ℓ(μ)
    for n in 2..=6 {
        let series = LowerCentralSeries::new(n, n).unwrap();
        let fam = zassenhaus(n);
        for mu in Partition::all(n) {
            let left = fam.power(&increasing(&mu));
            for lam in Partition::all(n) {
                for i in lam.as_composition().rearrangements() {
                    let x: Nsf = hopf_core::nsym::element::internal(&left, &fam.power(&i));
                    if let Some(j) = radical_layer(&series, &x, n) {
                        assert_eq!(j, lam.len() - mu.len(), "n = {n} {mu} {i}");
                    }
                }
            }
        }
    }
    let series = LowerCentralSeries::new(5, 3).unwrap();
    let fam = zassenhaus(5);
    let x = hopf_core::nsym::element::internal(
        &fam.power(&Composition::from(vec![5])),
        &fam.power(&Composition::from(vec![3, 2])),
    );
    assert_eq!(radical_layer(&series, &x, 3), Some(1));
}

#[test]
fn renderings() {
    let m = cartan_d0(5).unwrap();
    assert_eq!(m.render_text(), "    5  32\n5   1   q\n32  .   1\n");
    assert_eq!(m.to_csv(), "label,5,32\n5,1,q\n32,0,1\n");
    assert_eq!(m.to_json()["entries"][0][1], "q");
}

#[test]
fn printed_d0_matrix_9() {
    let m = cartan_d0(9).unwrap();
    let (labels, cells) = printed_d0(9);
    let got: Vec<String> = m.labels.iter().map(|l| l.to_string()).collect();
    assert_eq!(got, labels);
    assert_eq!(m.cells(), cells);
    assert_eq!(m, cartan_d0_lie(9));
}

#[test]
fn dk_constructions_agree_with_span_sym_8() {
    let sym = cartan_sym(8).unwrap();
    assert_eq!(sym, cartan_sym_lie(8));
    for k in [Some(0), Some(1), Some(2), Some(3), None] {
        assert_eq!(cartan_dk(8, k).unwrap(), cartan_dk_from_sym(&sym, k), "k = {k:?}");
    }
}
