//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Exact criteria compare with `==` on rationals; there is no numeric tolerance.
//! Each criterion also has a wall-clock budget, and exceeding it is a failure.
//! Criteria listed in `KNOWN_FAILURES` are still run and reported; they are
//! documented conflicts between printed values and the defining formulas.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use hopf_core::combinatorics::foata::{weak_maxima, x_set};
use hopf_core::combinatorics::*;
use hopf_core::csym::{character_check, q_derangement};
use hopf_core::descent_rep::{
    cartan_d0, cartan_dk, cartan_sym, q_dimension_polynomials, quiver_from_cartan, triangle_rows,
};
use hopf_core::exact::{frac, int, rank, QPoly, Rational};
use hopf_core::fqsym::ssigma::{prime_order, sharp_matrix_with};
use hopf_core::fqsym::tsetlin::{check_minimal_polynomial, spectrum, t_sym};
use hopf_core::fqsym::{
    embed, is_eigenvector, lie_eigenbasis, pbt_sharp_dims, project, s_sigma_sharp_matrix, selected_convention,
    trace_dimension, tsetlin_spectral, x_basis, FqsymElement,
};
use hopf_core::nsym::series::monomial_coeffs_of_e_transform;
use hopf_core::nsym::{d_nk, derangement_algebra_basis, dnk_dim, s1_divided, s_sharp, sharp, NsfBasis, NsfElement};
use hopf_core::wqsym::dense::Table;
use hopf_core::wqsym::{
    cartan_wqsym, d_n, embed as w_embed, saliola_idempotents, sharp_basis, sharp_ranks, SaliolaMode, WqsymElement,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

const KNOWN_FAILURES: &[usize] = &[1];

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn comp(v: &[usize]) -> Composition {
    Composition::from(v)
}

fn s(v: &[usize]) -> NsfElement {
    NsfElement::s(comp(v))
}

fn nsf(n: usize, terms: &[(&[usize], Rational)]) -> NsfElement {
    NsfElement::new(n, NsfBasis::S, terms.iter().map(|(i, q)| (comp(i), q.clone())).collect())
}

fn perm(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

fn fixed_point_counts(n: usize) -> BTreeMap<usize, u64> {
    let mut m = BTreeMap::new();
    for s in Permutation::all(n) {
        *m.entry(s.fixed_points()).or_insert(0) += 1;
    }
    m
}

fn stirling2(r: usize, k: usize) -> u64 {
    let mut t = vec![vec![0u64; r + 1]; r + 1];
    t[0][0] = 1;
    for i in 1..=r {
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + j as u64 * t[i - 1][j];
        }
    }
    if k <= r {
        t[r][k]
    } else {
        0
    }
}

fn random_element(n: usize, rng: &mut StdRng) -> NsfElement {
    let mut x = NsfElement::zero(n);
    for c in Composition::all(n) {
        if rng.gen_bool(0.5) {
            let q = frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            x = &x + &NsfElement::s(c).scale(&q);
        }
    }
    x
}

fn c1() -> Outcome {
    check(sharp(&s(&[1])).is_zero(), || "S_1^# != 0".into())?;
    let s2 = nsf(2, &[(&[2], int(1)), (&[1, 1], frac(-1, 2))]);
    check(s_sharp(2) == s2, || format!("S_2^# = {}", s_sharp(2)))?;
    let printed_s3 = nsf(3, &[(&[3], int(1)), (&[2, 1], int(-1)), (&[1, 1, 1], frac(1, 3))]);
    let m = monomial_coeffs_of_e_transform(3);
    let printed_m: [(&[usize], Rational); 7] = [
        (&[1], int(0)),
        (&[2], int(1)),
        (&[1, 1], frac(-1, 2)),
        (&[3], int(1)),
        (&[2, 1], int(-1)),
        (&[1, 2], int(0)),
        (&[1, 1, 1], frac(1, 3)),
    ];
    let mut bad = Vec::new();
    if s_sharp(3) != printed_s3 {
        bad.push(format!("S_3^# = {} (printed S_3 - S^21 + 1/3 S^111)", s_sharp(3)));
    }
    for (i, want) in printed_m {
        let got = m.get(&comp(i)).cloned().unwrap_or_else(|| int(0));
        if got != want {
            bad.push(format!("M_{}(1-E) = {got} (printed {want})", comp(i)));
        }
    }
    check(bad.is_empty(), || bad.join("; "))
}

fn c2() -> Outcome {
    for n in 0..=8 {
        let e = s_sharp(n);
        check(e.internal_product(&e) == e, || format!("S_{n}^# not idempotent"))?;
        for x in derangement_algebra_basis(n, Some(0)) {
            check(e.internal_product(&x) == x && x.internal_product(&e) == x, || {
                format!("S_{n}^# not neutral on {x}")
            })?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0xace);
    for trial in 0..200 {
        let total = rng.gen_range(1..=7);
        let m = rng.gen_range(0..=total);
        let k = rng.gen_range(0..=total);
        let fs = sharp(&random_element(total - m, &mut rng));
        let gs = sharp(&random_element(total - k, &mut rng));
        let lhs = s1_divided(m, &fs).internal_product(&s1_divided(k, &gs));
        let rhs = if m == k { s1_divided(m, &fs.internal_product(&gs)) } else { NsfElement::zero(total) };
        check(lhs == rhs, || format!("orthogonality fails at trial {trial} (m={m}, k={k}, degree {total})"))?;
    }
    Ok(())
}

const DNK_PRINTED: [&str; 5] = [
    "1 0 1 1 2 3 5 8 13 21",
    "1 1 1 2 3 5 8 13 21 34",
    "1 1 2 2 4 6 10 16 26 42",
    "1 1 2 3 4 7 11 18 29 47",
    "1 1 2 3 5 8 13 21 34 55",
];

fn c3() -> Outcome {
    for (k, want) in [Some(0), Some(1), Some(2), Some(3), None].into_iter().zip(DNK_PRINTED) {
        let row: Vec<String> = (0..=9).map(|n| dnk_dim(n, k).to_string()).collect();
        check(row.join(" ") == want, || format!("k = {k:?}: {}", row.join(" ")))?;
    }
    Ok(())
}

const D0_PRINTED: [(usize, &str, &[&str]); 5] = [
    (5, "5 32", &["1 q", ". 1"]),
    (6, "6 42 33 222", &["1 q . .", ". 1 . .", ". . 1 .", ". . . 1"]),
    (7, "7 52 43 322", &["1 q q q^2", ". 1 . q", ". . 1 .", ". . . 1"]),
    (
        8,
        "8 62 53 44 422 332 2222",
        &[
            "1 q q . q^2 q^2 .",
            ". 1 . . q . .",
            ". . 1 . . q .",
            ". . . 1 . . .",
            ". . . . 1 . .",
            ". . . . . 1 .",
            ". . . . . . 1",
        ],
    ),
    (
        9,
        "9 72 63 54 522 432 333 3222",
        &[
            "1 q q q q^2 2q^2 . q^3",
            ". 1 . . q q . q^2",
            ". . 1 . . q . .",
            ". . . 1 . q . .",
            ". . . . 1 . . q",
            ". . . . . 1 . .",
            ". . . . . . 1 .",
            ". . . . . . . 1",
        ],
    ),
];

fn c4() -> Outcome {
    for (n, labels, rows) in D0_PRINTED {
        let text = cartan_d0(n).map_err(|e| e.to_string())?.render_text();
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap_or("").split_whitespace().collect();
        check(header.join(" ") == labels, || format!("n = {n}: labels {}", header.join(" ")))?;
        let body: Vec<String> = lines.map(|l| l.split_whitespace().skip(1).collect::<Vec<_>>().join(" ")).collect();
        check(body == rows, || format!("n = {n}:\n{text}"))?;
    }
    Ok(())
}

const TRIANGLE_PRINTED: [&str; 16] = [
    "1",
    "2",
    "3",
    "5",
    "7 1",
    "11 2",
    "15 5 1",
    "22 9 3",
    "30 17 7 1",
    "42 28 16 3",
    "56 47 31 9 1",
    "77 73 58 21 4",
    "101 114 102 47 12 1",
    "135 170 175 94 32 4",
    "176 253 286 183 74 14 1",
    "231 365 461 333 162 40 5",
];

/// Partitions with two kinds of 1 and two kinds of 2, by direct enumeration.
fn two_kinds_brute(n: usize) -> i64 {
    let mut total = 0;
    for p in Partition::all(n) {
        let ones = p.multiplicity(1);
        let twos = p.multiplicity(2);
        total += (ones as i64 + 1) * (twos as i64 + 1);
    }
    total
}

fn c5() -> Outcome {
    let rows = triangle_rows(&q_dimension_polynomials(16));
    for (i, want) in TRIANGLE_PRINTED.iter().enumerate() {
        let got: Vec<String> = rows[i].iter().map(|c| c.to_string()).collect();
        check(got.join(" ") == *want, || format!("row {}: {}", i + 1, got.join(" ")))?;
    }
    for n in 5..=16 {
        check(rows[n - 1][1] == two_kinds_brute(n - 5), || format!("second column at n = {n}"))?;
    }
    for n in 2..=8 {
        let a = quiver_from_cartan(&cartan_dk(n, None).map_err(|e| e.to_string())?).arrows.len();
        let b = quiver_from_cartan(&cartan_sym(n - 2).map_err(|e| e.to_string())?).arrows.len();
        check(a == b, || format!("n = {n}: {a} arrows vs {b} in Sym_{}", n - 2))?;
    }
    Ok(())
}

fn c6() -> Outcome {
    for n in 1..=6 {
        let comps = Composition::all(n);
        let emb: Vec<FqsymElement> = comps.iter().map(|i| embed(&NsfElement::s(i.clone()))).collect();
        for (a, i) in comps.iter().enumerate() {
            for (b, j) in comps.iter().enumerate() {
                let fast = NsfElement::s(i.clone()).internal_product(&NsfElement::s(j.clone()));
                let slow = project(&emb[a].internal_product(&emb[b]))
                    .ok_or_else(|| format!("S^{i} * S^{j} left the descent algebra"))?;
                check(fast.to_s() == slow.to_s(), || format!("S^{i} * S^{j}"))?;
            }
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    for n in 1..=6 {
        check_minimal_polynomial(n).map_err(|e| e.to_string())?;
        let t = tsetlin_spectral(n).map_err(|e| e.to_string())?;
        let brute = fixed_point_counts(n);
        for k in spectrum(n) {
            let want = brute.get(&k).copied().unwrap_or(0);
            check(t.dims[&k] == want, || format!("n={n} k={k}: trace dim {} vs {want}", t.dims[&k]))?;
        }
        let ts = t_sym(n);
        let mut pow = NsfElement::s_n(n);
        for r in 1..=5 {
            pow = pow.internal_product(&ts);
            let mut want = NsfElement::zero(n);
            for k in 1..=n.min(r) {
                let mut c = vec![1; k];
                if n > k {
                    c.push(n - k);
                }
                want = &want + &s(&c).scale(&int(stirling2(r, k) as i64));
            }
            check(pow.to_s() == want.to_s(), || format!("T_{n}^{{*{r}}}"))?;
        }
    }
    Ok(())
}

fn c8() -> Outcome {
    for n in 1..=5 {
        let brute = fixed_point_counts(n);
        for s in spectrum(n) {
            let b = lie_eigenbasis(n, s).map_err(|e| e.to_string())?;
            let want = brute.get(&s).copied().unwrap_or(0) as usize;
            check(b.iter().all(|x| is_eigenvector(x, s)), || format!("n={n} s={s}: not an eigenvector"))?;
            let terms: Vec<_> = b.iter().map(|x| x.f_terms()).collect();
            check(b.len() == want && rank(&terms) == want, || format!("n={n} s={s}: rank vs {want}"))?;
        }
    }
    let counts: Vec<usize> = [0, 1, 2, 4].iter().map(|&s| lie_eigenbasis(4, s).map_or(0, |b| b.len())).collect();
    check(counts == [9, 8, 6, 1], || format!("n=4 counts {counts:?}"))
}

fn c9() -> Outcome {
    for n in 1..=7 {
        let counts = fixed_point_counts(n);
        let fact: i64 = (1..=n as i64).product();
        for k in 0..=n {
            let (z, l) = character_check(n, k);
            check(z == l, || format!("n={n} k={k}: Z(delta) != sum of L_mu"))?;
            let want = frac(counts.get(&k).copied().unwrap_or(0) as i64, fact);
            check(z.specialize_e() == want, || format!("n={n} k={k}: E-specialization"))?;
        }
    }
    Ok(())
}

fn c10() -> Outcome {
    for n in 0..=8 {
        let mut brute = vec![0i64; n * n.max(1) + 1];
        let mut count = 0;
        for p in Permutation::all(n) {
            if p.fixed_points() == 0 {
                let maj: usize = (1..n).filter(|&i| p.word()[i - 1] > p.word()[i]).sum();
                brute[maj] += 1;
                count += 1;
            }
        }
        let f = q_derangement(n).map_err(|e| e.to_string())?;
        check(f == QPoly::from_int_coeffs(&brute), || format!("n = {n}: {f}"))?;
        check(f.eval(&int(1)) == int(count), || format!("d_{n}(1)"))?;
    }
    Ok(())
}

fn is_left_ideal(set: &[Permutation]) -> bool {
    let members: BTreeSet<&Permutation> = set.iter().collect();
    set.iter().all(|s| {
        (1..s.len()).all(|i| {
            // s covers s_i∘s when i+1 precedes i in s
            let w = s.word();
            let a = w.iter().position(|&x| x == i).unwrap();
            let b = w.iter().position(|&x| x == i + 1).unwrap();
            if b < a {
                let below: Vec<usize> = w
                    .iter()
                    .map(|&x| {
                        if x == i {
                            i + 1
                        } else if x == i + 1 {
                            i
                        } else {
                            x
                        }
                    })
                    .collect();
                members.contains(&Permutation::new(below))
            } else {
                true
            }
        })
    })
}

const M_PRINTED: [&[u64]; 8] = [
    &[0, 1],
    &[1, 1, 1],
    &[1, 2, 2, 1],
    &[2, 3, 3, 3, 1],
    &[3, 5, 6, 4, 4, 1],
    &[5, 9, 9, 10, 5, 5, 1],
    &[8, 15, 19, 14, 15, 6, 6, 1],
    &[13, 27, 31, 34, 20, 21, 7, 7, 1],
];

fn c11() -> Outcome {
    for n in 0..=7 {
        let all = Permutation::all(n);
        let images: BTreeSet<Permutation> = all.iter().map(foata_phi).collect();
        check(images.len() == all.len(), || format!("foata not injective at n = {n}"))?;
        let mut stat = BTreeMap::new();
        for p in &all {
            check(foata_phi_inv(&foata_phi(p)) == *p, || format!("inverse fails on {p}"))?;
            *stat.entry(consecutive_lr_min_stat(p)).or_insert(0u64) += 1;
        }
        check(stat == fixed_point_counts(n), || format!("distributions differ at n = {n}"))?;
    }
    for n in 1..=6 {
        for k in 0..=n {
            check(is_left_ideal(&x_set(n, Some(k))), || format!("X_{n}^({k}) not an ideal"))?;
        }
    }
    let triple: Vec<Permutation> = ["15432", "35412", "45132"].iter().map(|s| perm(s)).collect();
    check(weak_maxima(&x_set(5, Some(0)), WeakSide::Left) == triple, || "maxima of X_5".into())?;
    for (i, row) in M_PRINTED.iter().enumerate() {
        let n = i + 1;
        for (k, &m) in row.iter().enumerate() {
            check(m_count(n, k) == m, || format!("formula m_{{{n},{k}}} = {}", m_count(n, k)))?;
            let e = weak_maxima(&x_set(n, Some(k)), WeakSide::Left).len() as u64;
            check(e == m, || format!("enumeration m_{{{n},{k}}} = {e}"))?;
        }
    }
    Ok(())
}

fn c12() -> Outcome {
    let d = [1u64, 0, 1, 2, 9, 44, 265];
    for n in 0..=6 {
        let r = x_basis(n).map_err(|e| e.to_string())?;
        check(r.rank as u64 == d[n] && r.independent && r.spanning, || {
            format!("n = {n}: rank {} of {} elements", r.rank, r.elements.len())
        })?;
        check(trace_dimension(&embed(&s_sharp(n))) == int(d[n] as i64), || format!("dim FQSym_{n}^#"))?;
    }
    Ok(())
}

fn non_unitary_maps(n: usize) -> u64 {
    // surjections [n] -> [m] with every fiber of size at least 2, all m
    let mut total = 0;
    let mut f = vec![0usize; n];
    loop {
        let m = f.iter().max().map_or(0, |x| x + 1);
        let mut sizes = vec![0; m];
        for &x in &f {
            sizes[x] += 1;
        }
        if sizes.iter().all(|&c| c >= 2) {
            total += 1;
        }
        let mut i = 0;
        while i < n {
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    if n == 0 {
        1
    } else {
        total
    }
}

fn c13() -> Outcome {
    for n in 1..=4 {
        let r = saliola_idempotents(n, SaliolaMode::Recursive).map_err(|e| e.to_string())?;
        let d = saliola_idempotents(n, SaliolaMode::Direct).map_err(|e| e.to_string())?;
        check(r == d, || format!("recursive and direct differ at n = {n}"))?;
        let mut total = WqsymElement::zero(n);
        for (p, x) in &r {
            total = &total + x;
            for (q, y) in &r {
                let xy = x.internal_product(y);
                check(if p == q { xy == *x } else { xy.is_zero() }, || format!("e_{p} * e_{q}"))?;
            }
        }
        check(total == WqsymElement::identity(n), || format!("sum at n = {n}"))?;
    }
    let t = Table::new(5).map_err(|e| e.to_string())?;
    let e = saliola_idempotents(5, SaliolaMode::Direct).map_err(|e| e.to_string())?;
    let v: Vec<(i128, Vec<i128>)> = e.values().map(|x| t.element_vector(x)).collect();
    let mut sum = vec![int(0); t.len()];
    for (a, (da, xa)) in v.iter().enumerate() {
        for (i, c) in xa.iter().enumerate() {
            sum[i] += Rational::new((*c).into(), (*da).into());
        }
        for (b, (_, xb)) in v.iter().enumerate() {
            let p = t.mul(xa, xb);
            let ok = if a == b { p.iter().zip(xa).all(|(x, y)| *x == y * da) } else { p.iter().all(|c| *c == 0) };
            check(ok, || "orthogonality at n = 5".into())?;
        }
    }
    let id = t.index(&PackedWord::ones(5));
    check(sum.iter().enumerate().all(|(i, c)| *c == int((i == id) as i64)), || "sum at n = 5".into())?;
    let a = SetPartition::parse("12|3|4|56|7").map_err(|e| e.to_string())?;
    let b = SetPartition::parse("1234|567").map_err(|e| e.to_string())?;
    let c = cartan_wqsym(7, false).map_err(|e| e.to_string())?.entry(&a, &b);
    check(c == QPoly::monomial(3, int(2)), || format!("c(q) = {c}"))?;
    let want = [1u64, 0, 1, 1, 7, 21];
    for n in 0..=5 {
        let r = sharp_ranks(n).map_err(|e| e.to_string())?;
        check(non_unitary_maps(n) == want[n], || format!("oracle count at n = {n}"))?;
        check(r.basis_rank as u64 == want[n] && r.image_rank as u64 == want[n], || {
            format!("dim W_{n}^# = {}", r.image_rank)
        })?;
        let dn = d_n(n);
        check(dn == w_embed(&d_nk(n, 0)), || format!("D_{n} differs from the embedded one"))?;
        for (u, x) in sharp_basis(n) {
            check(dn.internal_product(&x) == x && x.internal_product(&dn) == x, || format!("D_{n} on N_{u}^#"))?;
        }
    }
    Ok(())
}

const REFERENCE_N4_ORDER: &str = "4321 4312 4231 4123 4132 4213 3421 3412 2341 1234 1243 2314 2431 1423 3241 2134 3142 1324 1432 2413 2143 3214 1342 3124";

const REFERENCE_N4: &str = "\
. . . . . . . 1/4 . -1/8 1/4 -3/8 . 1/8 . -1/4 3/8 -1/4 -1/4 3/8 1/2 -3/4 1/8 -3/8
. . . . . . . -1/2 . 1/2 . 1/2 . -1/2 . 1 . 1/2 . -1/2 . 1 . 1
. . . . . . . . . . . . . . . . . . . . . . -1/2 .
. . . . . . . . . -1 . -1 . . . -1 . -1/2 . . . -1 . -1
. . . . . . . . . . -1 1 . . . . -1 1/2 . . -1 1 . .
. . . . . . . . . . . . . . . . . -1/2 . . . . . .
. . . . . . . -1/2 . . . . . . . . . . . . . . . .
. . . . . . . 1 . . . . . . . . . . . . . . . .
. . . . . . . . . . . . . . . . 1/2 . . . . . . .
. . . . . . . . . 1 . 1 . . . 1 . . . . . 1 . 1/2
. . . . . . . . . . 1 -1 . . . . . . . . 1 -1 . -1/2
. . . . . . . . . . . . . . . . . . . . . . . 1/2
. . . . . . . . . . . . . . . . -1/2 . . . . . . .
. . . . . . . . . . . . . 1 . -1 . . . 1 . -1 . -1/2
. . . . . . . . . . . . . . . . -1/2 . . . . . . .
. . . . . . . . . . . . . . . . . . . . . . . -1/2
. . . . . . . . . . . . . . . . 1 . . . . . . .
. . . . . . . . . . . . . . . . . 1 . . . . . .
. . . . . . . . . . . . . . . . . . 1 -1 -1 1 . 1/2
. . . . . . . . . . . . . . . . . . . . . . . -1/2
. . . . . . . . . . . . . . . . . . . . . . . 1/2
. . . . . . . . . . . . . . . . . . . . . . . -1/2
. . . . . . . . . . . . . . . . . . . . . . 1 .
. . . . . . . . . . . . . . . . . . . . . . . 1
";

fn matches_printed(order: &[&str], rows: &[Vec<&str>]) -> Outcome {
    let n = order[0].len();
    let conv = selected_convention().ok_or("no S^sigma convention matches")?;
    let m = sharp_matrix_with(conv, n);
    let all = Permutation::all(n);
    let idx = |s: &str| all.iter().position(|x| *x == perm(s)).unwrap();
    for (i, r) in order.iter().enumerate() {
        for (j, c) in order.iter().enumerate() {
            let want = if rows[i][j] == "." {
                int(0)
            } else {
                hopf_core::exact::rational::parse(rows[i][j]).map_err(|e| e.to_string())?
            };
            check(m[idx(r)][idx(c)] == want, || format!("n = {n}: row {r} column {c}"))?;
        }
    }
    let printed: Vec<Permutation> = order.iter().map(|s| perm(s)).collect();
    check(prime_order(n) == printed, || format!("row order at n = {n}"))
}

fn c14() -> Outcome {
    matches_printed(&["21", "12"], &[vec![".", "-1/2"], vec![".", "1"]])?;
    let rows3: Vec<Vec<&str>> =
        [". . . 1/3 -1/3 2/3", ". . . -1 . -1", ". . . . . .", ". . . 1 . 1", ". . . . 1 -1", ". . . . . ."]
            .iter()
            .map(|r| r.split(' ').collect())
            .collect();
    matches_printed(&["321", "312", "231", "123", "132", "213"], &rows3)?;
    let order: Vec<&str> = REFERENCE_N4_ORDER.split(' ').collect();
    let rows: Vec<Vec<&str>> = REFERENCE_N4.lines().map(|r| r.split(' ').collect()).collect();
    matches_printed(&order, &rows)?;
    for n in 2..=6 {
        let r = s_sigma_sharp_matrix(n).map_err(|e| e.to_string())?;
        println!(
            "    report: S^sigma sharp triangularity {} (n={n}), literal reading {}",
            r.verdict(),
            r.literal_verdict()
        );
    }
    let p = pbt_sharp_dims(6).map_err(|e| e.to_string())?;
    let dims: Vec<String> = p.degrees.iter().map(|d| d.sharp_rank.to_string()).collect();
    println!("    report: dim PBT^sharp = {} vs Fine 1 0 1 2 6 18 57: {} (n<=6)", dims.join(" "), p.verdict());
    Ok(())
}

type Criterion = (usize, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 14] = [
    (1, "sharp-transform pins", 1, c1),
    (2, "projector, unit and orthogonality laws", 30, c2),
    (3, "dimension table d_n^(k)", 1, c3),
    (4, "printed q-Cartan matrices of D^(0)_n, n = 5..9", 60, c4),
    (5, "q-dimension triangle, second column, arrows", 300, c5),
    (6, "internal product against the group algebra", 120, c6),
    (7, "Tsetlin minimal polynomial, projectors, Bell powers", 120, c7),
    (8, "Lie eigenbases", 60, c8),
    (9, "characters of the derangement idempotents", 120, c9),
    (10, "q-derangement numbers", 30, c10),
    (11, "Foata transform, X_n^(k), m_{n,k}", 120, c11),
    (12, "F^sharp basis over X_n", 120, c12),
    (13, "WQSym idempotents, Cartan example, sharp dimensions", 180, c13),
    (14, "conjecture reports", 300, c14),
];

#[test]
fn acceptance() {
    let mut unexpected = Vec::new();
    for (id, name, budget, f) in CRITERIA {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            check(elapsed <= Duration::from_secs(budget), || {
                format!("took {:.1} s, budget {budget} s", elapsed.as_secs_f64())
            })
        });
        match &outcome {
            Ok(()) => println!("PASS {id:>2} {name} ({:.2} s)", elapsed.as_secs_f64()),
            Err(why) => {
                let known = if KNOWN_FAILURES.contains(&id) { " [known]" } else { "" };
                println!("FAIL {id:>2} {name}{known} ({:.2} s): {why}", elapsed.as_secs_f64());
            }
        }
        if outcome.is_err() && !KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}
