#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use hopf_core::combinatorics::{pack_biword, Composition, PackedWord, SetPartition};
use hopf_core::exact::{frac, int, rank, LinComb, QPoly, Rational};
use hopf_core::nsym::{d_nk, s_sharp, zassenhaus, NsfElement};
use hopf_core::wqsym::cartan::{check_cartan_orientation, labels};
use hopf_core::wqsym::dense::Table;
use hopf_core::wqsym::saliola::{l_pi, sym_idempotents, words_over};
use hopf_core::wqsym::*;
use proptest::prelude::*;

fn w(s: &str) -> PackedWord {
    PackedWord::parse(s).unwrap()
}

fn nw(s: &str) -> WqsymElement {
    WqsymElement::n(w(s))
}

fn sp(s: &str) -> SetPartition {
    SetPartition::parse(s).unwrap()
}

fn s_el(i: &[usize]) -> WqsymElement {
    embed(&NsfElement::s(Composition::from(i)))
}

fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

fn fubini(n: usize) -> u64 {
    // a(n) = Σ_k C(n,k) a(n-k)
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        let mut c = 1u64;
        let mut s = 0;
        for k in 1..=m {
            c = c * (m - k + 1) as u64 / k as u64;
            s += c * a[m - k];
        }
        a[m] = s;
    }
    a[n]
}

/// Maps `[n] -> [n]` whose image is `{1..m}` with every value taken at least twice.
fn non_unitary_count(n: usize) -> u64 {
    let mut count = 0;
    for code in 0..(n as u64).pow(n as u32) {
        let mut c = code;
        let mut hits = vec![0usize; n + 1];
        for _ in 0..n {
            hits[(c % n as u64) as usize + 1] += 1;
            c /= n as u64;
        }
        let m = (1..=n).rev().find(|&x| hits[x] > 0).unwrap_or(0);
        if (1..=m).all(|x| hits[x] >= 2) {
            count += 1;
        }
    }
    count
}

fn exact_rank(xs: &[WqsymElement]) -> usize {
    let v: Vec<LinComb<PackedWord>> = xs.iter().map(|x| x.terms().clone()).collect();
    rank(&v)
}

#[test]
fn internal_product_rule() {
    assert_eq!(nw("11").internal_product(&nw("12")), nw("12"));
    assert_eq!(pack_biword(&[4, 2, 4, 1, 2, 2, 5, 3], &[5, 3, 1, 5, 4, 3, 2, 3]).unwrap(), w("62513274"));
    for n in 0..=3 {
        let ws = PackedWord::all(n);
        let id = WqsymElement::identity(n);
        for a in &ws {
            let x = WqsymElement::n(a.clone());
            assert_eq!(id.internal_product(&x), x);
            assert_eq!(x.internal_product(&id), x);
            for b in &ws {
                for c in &ws {
                    let y = WqsymElement::n(b.clone());
                    let z = WqsymElement::n(c.clone());
                    assert_eq!(
                        x.internal_product(&y).internal_product(&z),
                        x.internal_product(&y.internal_product(&z))
                    );
                }
            }
        }
    }
    assert!(nw("1").internal_product(&nw("11")).is_zero());
}

#[test]
fn embedding_of_sym() {
    for n in 1..=5 {
        let comps = Composition::all(n);
        let step = if n == 5 { 3 } else { 1 };
        for i in comps.iter().step_by(step) {
            for j in comps.iter().step_by(step) {
                let si = NsfElement::s(i.clone());
                let sj = NsfElement::s(j.clone());
                assert_eq!(embed(&si.internal_product(&sj)), embed(&si).internal_product(&embed(&sj)), "{i:?} {j:?}");
            }
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for i in Composition::all(a) {
                for j in Composition::all(b) {
                    let si = NsfElement::s(i.clone());
                    let sj = NsfElement::s(j.clone());
                    assert_eq!(embed(&si.product(&sj)), embed(&si).product(&embed(&sj)));
                }
            }
        }
    }
    assert_eq!(s_el(&[3]), WqsymElement::identity(3));
    assert_eq!(nw("1").product(&nw("1")), &nw("12") + &nw("21"));
}

#[test]
fn sharp_transform() {
    assert!(sharp(&nw("1")).is_zero());
    for n in 0..=6 {
        assert_eq!(sigma1_sharp(n), embed(&s_sharp(n)), "n={n}");
    }
    let want = [1u64, 0, 1, 1, 7, 21, 141];
    for n in 0..=6 {
        assert_eq!(non_unitary_count(n), want[n]);
        assert_eq!(non_unitary_words(n).len() as u64, want[n]);
    }
    for n in 0..=5 {
        let r = sharp_ranks(n).unwrap();
        assert_eq!(r.non_unitary as u64, want[n]);
        assert_eq!(r.basis_rank, r.non_unitary, "n={n}");
        assert_eq!(r.image_rank, r.non_unitary, "n={n}");
    }
    for n in 0..=4 {
        let b: Vec<WqsymElement> = sharp_basis(n).into_iter().map(|(_, x)| x).collect();
        let all: Vec<WqsymElement> = PackedWord::all(n).into_iter().map(|u| sharp(&WqsymElement::n(u))).collect();
        assert_eq!(exact_rank(&b), b.len());
        assert_eq!(exact_rank(&all), b.len());
    }
    assert!(sharp_ranks(6).is_err());
}

#[test]
fn d_n_is_neutral_on_the_image() {
    for n in 0..=5 {
        let d = d_n(n);
        assert_eq!(d, embed(&d_nk(n, 0)));
        for (_, x) in sharp_basis(n) {
            assert_eq!(d.internal_product(&x), x);
            assert_eq!(x.internal_product(&d), x);
        }
    }
}

#[test]
fn j_is_an_ideal_and_the_projection_is_an_isomorphism() {
    for n in 1..=4 {
        let gens: Vec<WqsymElement> =
            PackedWord::all(n).into_iter().filter(|u| u.has_singleton_letter()).map(WqsymElement::n).collect();
        assert!(is_two_sided_ideal(n, &gens), "n={n}");
    }
    for n in 1..=4 {
        let b: Vec<WqsymElement> = sharp_basis(n).into_iter().map(|(_, x)| x).collect();
        let img: Vec<WqsymElement> = b.iter().map(|x| x.project_mod_j()).collect();
        assert_eq!(exact_rank(&img), b.len());
        for x in &b {
            for y in &b {
                let lhs = x.internal_product(y).project_mod_j();
                let rhs = x.project_mod_j().internal_product(&y.project_mod_j()).project_mod_j();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(d_n(n).project_mod_j(), WqsymElement::identity(n).project_mod_j());
    }
    // n = 5: independence of the images, products on a sample
    let b: Vec<WqsymElement> = sharp_basis(5).into_iter().map(|(_, x)| x).collect();
    let img: Vec<WqsymElement> = b.iter().map(|x| x.project_mod_j()).collect();
    assert_eq!(exact_rank(&img), 21);
    for (x, y) in b.iter().zip(b.iter().rev()).take(4) {
        let lhs = x.internal_product(y).project_mod_j();
        let rhs = x.project_mod_j().internal_product(&y.project_mod_j()).project_mod_j();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn zassenhaus_decomposition_of_s_n() {
    for n in 1..=6 {
        let c = zassenhaus_coefficients(n).unwrap();
        let fam = zassenhaus(n);
        let mut sum = LinComb::zero();
        for (i, x) in &c {
            // σ_1 = e^{ζ_1} e^{ζ_2} ...: only weakly increasing I, with 1/m_I
            assert!(i.parts().windows(2).all(|p| p[0] <= p[1]), "{i:?}");
            let m: u64 = i.sorted().multiplicities().iter().map(|&(_, k)| (1..=k as u64).product::<u64>()).product();
            assert_eq!(*x, frac(1, m as i64));
            sum.add_scaled(&fam.power(i), x);
        }
        assert_eq!(sum, NsfElement::s_n(n).s_terms());
        let sym = sym_idempotents(n).unwrap();
        assert_eq!(sym, fam.idempotents(n));
    }
}

#[test]
fn l_pi_normalization() {
    let c = zassenhaus_coefficients(4).unwrap();
    for p in SetPartition::all(4) {
        let l = l_pi(&p, &c).unwrap();
        assert_eq!(l.terms().sum_coeffs(), int(1));
        assert_eq!(words_over(&p).len(), (1..=p.num_blocks()).product::<usize>());
    }
}

#[test]
fn saliola_families() {
    let one = saliola_idempotents(1, SaliolaMode::Recursive).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one.values().next().unwrap(), &nw("1"));
    for n in 1..=5 {
        let r = saliola_idempotents(n, SaliolaMode::Recursive).unwrap();
        let d = saliola_idempotents(n, SaliolaMode::Direct).unwrap();
        assert_eq!(r, d, "n={n}");
        assert_eq!(r.len() as u64, bell(n));
        let fact: i64 = (1..=n as i64).product();
        let all_perms: LinComb<PackedWord> =
            PackedWord::all(n).into_iter().filter(|u| u.max_letter() == n).map(|u| (u, frac(1, fact))).collect();
        assert_eq!(r[&SetPartition::singletons(n)].terms(), &all_perms);
    }
    assert!(saliola_idempotents(7, SaliolaMode::Direct).is_err());
}

#[test]
fn saliola_orthogonality_exact() {
    for n in 1..=4 {
        let e = saliola_idempotents(n, SaliolaMode::Direct).unwrap();
        let mut total = WqsymElement::zero(n);
        for (p, x) in &e {
            total = &total + x;
            for (q, y) in &e {
                let xy = x.internal_product(y);
                if p == q {
                    assert_eq!(xy, *x);
                } else {
                    assert!(xy.is_zero(), "{p} {q}");
                }
            }
        }
        assert_eq!(total, WqsymElement::identity(n));
    }
}

#[test]
fn saliola_orthogonality_degree_five() {
    let t = Table::new(5).unwrap();
    let e = saliola_idempotents(5, SaliolaMode::Direct).unwrap();
    let v: Vec<(i128, Vec<i128>)> = e.values().map(|x| t.element_vector(x)).collect();
    let mut sum = vec![Rational::from_integer(0.into()); t.len()];
    for (a, (da, xa)) in v.iter().enumerate() {
        for (i, c) in xa.iter().enumerate() {
            sum[i] += Rational::new((*c).into(), (*da).into());
        }
        for (b, (_, xb)) in v.iter().enumerate() {
            let p = t.mul(xa, xb);
            if a == b {
                // (x/d)^2 = x/d  <=>  x*x = d x
                let dx: Vec<i128> = xa.iter().map(|c| c * v[b].0).collect();
                assert_eq!(p, dx);
            } else {
                assert!(p.iter().all(|c| *c == 0));
            }
        }
    }
    let id = t.index(&PackedWord::ones(5));
    for (i, c) in sum.iter().enumerate() {
        assert_eq!(*c, int((i == id) as i64));
    }
}

#[test]
fn shape_sums_are_the_sym_idempotents() {
    for n in 1..=4 {
        let e = saliola_idempotents(n, SaliolaMode::Recursive).unwrap();
        let sym = sym_idempotents(n).unwrap();
        let mut by_shape: BTreeMap<_, WqsymElement> = BTreeMap::new();
        for (p, x) in &e {
            let s = by_shape.entry(p.shape()).or_insert_with(|| WqsymElement::zero(n));
            *s = &*s + x;
        }
        for (lam, x) in by_shape {
            assert_eq!(x, embed(&sym[&lam]), "n={n} {lam}");
        }
    }
}

#[test]
fn radical_and_semisimple_quotient() {
    let r2 = radical_and_quotient(2).unwrap();
    assert_eq!(r2.radical_basis.len(), 1);
    assert_eq!(r2.radical_basis[0], &nw("21") - &nw("12"));
    for n in 0..=5 {
        let r = radical_and_quotient(n).unwrap();
        assert_eq!(r.radical_basis.len() as u64, fubini(n) - bell(n), "n={n}");
        assert_eq!(r.partitions.len() as u64, bell(n));
        assert!(r.squares_vanish && r.quotient_matches_meet);
    }
    assert_eq!([fubini(4), bell(4)], [75, 15]);
    let r3 = radical_and_quotient(3).unwrap();
    let a = r3.partitions.binary_search(&w("122").set_partition()).unwrap();
    let b = r3.partitions.binary_search(&w("112").set_partition()).unwrap();
    assert_eq!(r3.partitions[r3.product_table[a][b]], sp("1|2|3"));
    for n in 1..=3 {
        let r = radical_and_quotient(n).unwrap();
        assert!(is_two_sided_ideal(n, &r.radical_basis));
    }
    // products of n radical elements vanish
    let r = radical_and_quotient(3).unwrap();
    for x in &r.radical_basis {
        for y in &r.radical_basis {
            for z in &r.radical_basis {
                assert!(x.internal_product(y).internal_product(z).is_zero());
            }
        }
    }
    assert!(radical_and_quotient(7).is_err());
}

#[test]
fn cartan_formula() {
    let a = sp("12|3|4|56|7");
    let b = sp("1234|567");
    let m = cartan_wqsym(7, false).unwrap();
    assert_eq!(m.entry(&a, &b), QPoly::monomial(3, int(2)));
    assert_eq!(cartan_invariant(&a, &b), 2);
    for p in SetPartition::all(4) {
        assert_eq!(cartan_invariant(&p, &p), 1);
    }
    assert_eq!(cartan_invariant(&sp("12|34"), &sp("13|24")), 0);
    assert_eq!(cartan_invariant(&sp("1234"), &sp("1|2|3|4")), 0);
    for n in 1..=5 {
        assert!(cartan_wqsym(n, false).unwrap().is_upper_triangular());
    }
    assert!(cartan_wqsym(8, false).is_err());
}

#[test]
fn cartan_restricted_to_sharp() {
    for n in 2..=6 {
        let full = cartan_wqsym(n, false).unwrap();
        let m = cartan_wqsym(n, true).unwrap();
        assert!(m.labels.iter().all(|p| p.is_non_unitary()));
        assert_eq!(m.size(), SetPartition::all(n).iter().filter(|p| p.blocks().iter().all(|b| b.len() > 1)).count());
        for a in &m.labels {
            for b in &m.labels {
                assert_eq!(m.entry(a, b), full.entry(a, b));
            }
        }
        // quiver: one arrow per q^1 entry
        let arrows = quiver_arrows(&m.labels);
        let mut from_q = Vec::new();
        for a in &m.labels {
            for b in &m.labels {
                if m.entry(a, b).coeff(1) == int(1) {
                    from_q.push((a.clone(), b.clone()));
                }
            }
        }
        from_q.sort();
        assert_eq!(arrows, from_q);
    }
    let m6 = cartan_wqsym(6, true).unwrap();
    assert!(quiver_arrows(&m6.labels).contains(&(sp("12|34|56"), sp("1234|56"))));
}

#[test]
fn cartan_matches_idempotent_sandwiches() {
    for n in 1..=4 {
        // c_{α,β} = dim e_β * W * e_α
        let (direct, transposed) = check_cartan_orientation(n).unwrap();
        assert!(transposed, "n={n}");
        assert_eq!(direct, n <= 1);
    }
}

#[test]
fn sandwich_trace_matches_span_dimension() {
    // independent of the trace shortcut: rank of {e_α * N_u * e_β}
    for n in 1..=3 {
        let e = saliola_idempotents(n, SaliolaMode::Direct).unwrap();
        let ls = labels(n, false);
        let s = sandwich_dimensions(n).unwrap();
        for (a, pa) in ls.iter().enumerate() {
            for (b, pb) in ls.iter().enumerate() {
                let span: Vec<WqsymElement> = PackedWord::all(n)
                    .into_iter()
                    .map(|u| e[pa].internal_product(&WqsymElement::n(u)).internal_product(&e[pb]))
                    .collect();
                assert_eq!(exact_rank(&span) as u64, s[a][b], "{pa} {pb}");
            }
        }
    }
}

#[test]
fn v_filtration_subalgebras() {
    for n in 1..=5 {
        let v0 = v_filtration(n, 0).unwrap();
        assert_eq!(v0.dim(), non_unitary_count(n) as usize, "n={n}");
        assert!(v0.unital);
    }
    for n in 1..=4 {
        for k in 0..=n {
            let v = v_filtration(n, k).unwrap();
            assert_eq!(v.closed, Some(true), "n={n} k={k}");
            assert!(v.unital);
            assert_eq!(v.block_dims.len(), k + 1);
            assert_eq!(v.dim(), v.block_dims.iter().sum::<usize>());
            assert_eq!(exact_rank(&v.basis), v.dim());
            for b in &v.basis {
                assert_eq!(v.neutral.internal_product(b), *b);
            }
        }
    }
    // D_{n,j} * W_n * D_{n,j}: choose the j fixed letters, then W_{n-j}^♯
    for n in 1..=5 {
        let v = v_filtration(n, n).unwrap();
        for (j, d) in v.block_dims.iter().enumerate() {
            let binom = (0..j as u64).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1));
            assert_eq!(*d as u64, binom * non_unitary_count(n - j), "n={n} j={j}");
        }
    }
    assert!(v_filtration(6, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn packing_is_associative(n in 1usize..=6, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut word = || -> PackedWord {
            let raw: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
            hopf_core::combinatorics::pack(&raw)
        };
        let (a, b, c) = (word(), word(), word());
        let ab = pack_biword(a.word(), b.word()).unwrap();
        let bc = pack_biword(b.word(), c.word()).unwrap();
        prop_assert_eq!(pack_biword(ab.word(), c.word()).unwrap(), pack_biword(a.word(), bc.word()).unwrap());
        prop_assert_eq!(ab.set_partition(), a.set_partition().meet(&b.set_partition()));
    }

    #[test]
    fn unitary_words_stay_unitary(n in 1usize..=7, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let raw: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
        let u = hopf_core::combinatorics::pack(&raw);
        let raw2: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
        let v = hopf_core::combinatorics::pack(&raw2);
        if u.has_singleton_letter() {
            prop_assert!(pack_biword(u.word(), v.word()).unwrap().has_singleton_letter());
            prop_assert!(pack_biword(v.word(), u.word()).unwrap().has_singleton_letter());
        }
    }
}
