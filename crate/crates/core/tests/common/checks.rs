//! Checks shared by the golden tests and the acceptance runner. Each returns
//! a short summary on success and a description of the mismatch otherwise.

#![allow(dead_code)]

use nanoword::algebra::{parse_element, parse_ring, AbelianPi, Group};
use nanoword::classify::{classify, Classification, ClassifyOptions};
use nanoword::homotopy::{search, SearchConfig, Verdict};
use nanoword::invariants::{gamma, interlacement, self_linking};
use nanoword::kei::{characteristic_sequence, parse_sequence};
use nanoword::linear::{
    census_is_trivial, is_tricoloring, lambda, lambda_by_elimination, lambda_by_paths, lambda_grade, lambda_iota,
    tricolor_census, BetaSet,
};
use nanoword::pairing::{build_pairing, is_primitive, norm_lower_bound, reduce_primitive, ReductionStep};
use nanoword::{Lambda, Nanoword, Setting};

use super::*;

pub type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn desingularize_ababa() -> Check {
    let s = ab_free();
    let d = plain(&s, "ababa");
    let want = Nanoword::parse("A12:a A13:a A23:a B:b :: A12 A13 B A12 A23 B A13 A23", &s.spec).unwrap();
    ensure(d.canonical_form() == want.canonical_form(), || {
        format!("got {}", d.display(&s.spec))
    })?;
    Ok(format!("{}", d.display(&s.spec)))
}

pub fn gamma_golden() -> Check {
    let s = two_free();
    let n = pattern("ABAB", &[('A', 0), ('B', 2)]);
    let g = gamma(&s, &n).map_err(|e| e.to_string())?;
    let want = parse_element(&s.pi, "a b a^-1 b^-1").unwrap();
    ensure(g == want, || format!("γ(ABAB) = {}", s.pi.render(&g)))?;
    let all = all_nanowords(&s.spec, 3);
    for n in &all {
        let g = gamma(&s, n).map_err(|e| e.to_string())?;
        ensure(s.pi.is_in_commutator(&g), || format!("γ not in [Π,Π] for {}", n.display(&s.spec)))?;
    }
    Ok(format!("γ(ABAB) = {}; {} nanowords of rank ≤ 3 have γ in [Π,Π]", s.pi.render(&g), all.len()))
}

pub fn self_linking_golden() -> Check {
    let s = two_free();
    let n = pattern("ABAB", &[('A', 0), ('B', 0)]);
    let sl = self_linking(&s, &n).map_err(|e| e.to_string())?;
    let got = [
        s.ab.render(&sl.classes[0]),
        s.ab.render(&sl.classes[1]),
        sl.per_letter[0].render(&s.ab),
        sl.per_letter[1].render(&s.ab),
    ];
    ensure(got == ["a", "a^-1", "a + a^-1", "0"], || format!("got {got:?}"))?;
    Ok(format!("[A]={}, [B]={}, [a]_w={}, [τa]_w={}", got[0], got[1], got[2], got[3]))
}

/// Rows of the printed tables are A₁, A₂, A₃, B = a_2_3, a_1_3, a_1_2, b_1_2.
const ABAAB_ORDER: [&str; 4] = ["a_2_3", "a_1_3", "a_1_2", "b_1_2"];

fn ab_matrix(s: &Setting, rows: &[&[&str]]) -> Vec<Vec<AbelianPi>> {
    rows.iter().map(|r| r.iter().map(|x| parse_element(&s.ab, x).unwrap()).collect()).collect()
}

pub fn pairing_golden() -> Check {
    let s = primed();
    let n = plain(&s, "abaab");
    let idx: Vec<usize> = ABAAB_ORDER
        .iter()
        .map(|name| n.letters().iter().position(|l| l.name == *name).expect("letter"))
        .collect();
    let nw = interlacement(&n);
    let got_n: Vec<Vec<i8>> = idx.iter().map(|&i| idx.iter().map(|&j| nw[i][j]).collect()).collect();
    let want_n = vec![vec![0, -1, 0, 0], vec![1, 0, -1, 1], vec![0, 1, 0, 1], vec![0, -1, -1, 0]];
    ensure(got_n == want_n, || format!("n_w = {got_n:?}"))?;

    let lk: Vec<Vec<AbelianPi>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| nanoword::pairing::linking(&s, &n, i, j).unwrap()).collect())
        .collect();
    let want_lk = ab_matrix(
        &s,
        &[&["1", "1", "a^-1", "1"], &["1", "1", "1", "a"], &["a", "1", "1", "a"], &["1", "a^-1", "a^-1", "1"]],
    );
    ensure(lk == want_lk, || "lk_w differs".into())?;

    let p = build_pairing(&s, &n).map_err(|e| e.to_string())?;
    let mut rows = vec![0];
    rows.extend(ABAAB_ORDER.iter().map(|x| p.index(x).expect("element")));
    let b: Vec<Vec<AbelianPi>> =
        rows.iter().map(|&i| rows.iter().map(|&j| p.entry(i, j).clone()).collect()).collect();
    let want_b = ab_matrix(
        &s,
        &[
            &["1", "a", "b^-1", "a^-1 b^-1", "a^2"],
            &["a^-1", "1", "a^-2", "a^-2", "1"],
            &["b", "a^2", "1", "a^-2", "a^3 b"],
            &["a b", "a^2", "a^2", "1", "a^3 b"],
            &["a^-2", "1", "a^-3 b^-1", "a^-3 b^-1", "1"],
        ],
    );
    ensure(b == want_b, || {
        let r: Vec<Vec<String>> = b.iter().map(|r| r.iter().map(|x| s.ab.render(x)).collect()).collect();
        format!("b_w = {r:?}")
    })?;
    ensure(is_primitive(&p, &s.spec), || "b_w(abaab) is not primitive".into())?;
    let bound = norm_lower_bound(&s, &n).map_err(|e| e.to_string())?;
    ensure(bound == 4, || format!("norm bound {bound}"))?;

    let f = ab_fixed();
    let n = plain(&f, "ababa");
    let p = build_pairing(&f, &n).map_err(|e| e.to_string())?;
    let mut rows = vec![0];
    rows.extend(ABAAB_ORDER.iter().map(|x| p.index(x).expect("element")));
    let b: Vec<Vec<AbelianPi>> =
        rows.iter().map(|&i| rows.iter().map(|&j| p.entry(i, j).clone()).collect()).collect();
    let want = ab_matrix(
        &f,
        &[
            &["1", "a b", "1", "a b", "1"],
            &["a b", "1", "1", "1", "a b"],
            &["1", "1", "1", "1", "1"],
            &["a b", "1", "1", "1", "a b"],
            &["1", "a b", "1", "a b", "1"],
        ],
    );
    ensure(b == want, || "b_w(ababa) differs from the simplified matrix".into())?;
    let (prim, steps) = reduce_primitive(&p, &f.spec);
    let want_steps = vec![
        ReductionStep::Annihilating("a_1_3".into()),
        ReductionStep::Twins("a_1_2".into(), "a_2_3".into()),
        ReductionStep::Annihilating("b_1_2".into()),
    ];
    ensure(steps == want_steps && prim.card() == 1, || format!("reduction steps {steps:?}"))?;
    Ok("abaab: n_w, lk_w, b_w match, primitive, norm bound 4; ababa: A₂ → A₁,A₃ → B → trivial".into())
}

pub fn lambda_golden() -> Check {
    let s = two_free();
    let n = pattern("ABAB", &[('A', 0), ('B', 2)]);
    let l = lambda(&s, &n).map_err(|e| e.to_string())?;
    let want: Lambda = parse_ring(&s.psi, "a b a. b. + a - a b b. + b. - a a. b.").unwrap();
    ensure(l == want, || format!("λ(ABAB) = {}", l.render(&s.psi)))?;
    let g = lambda_grade(&l);
    let wg = ["a b a. b.", "-a b b. + b.", "a - a a. b.", "0"];
    for (k, w) in wg.iter().enumerate() {
        let w: Lambda = parse_ring(&s.psi, w).unwrap();
        ensure(g[k] == w, || format!("graded part {k} = {}", g[k].render(&s.psi)))?;
    }
    let f = ab_fixed();
    let l00 = lambda_grade(&lambda(&f, &plain(&f, "ababa")).unwrap())[0].clone();
    let want00: Lambda = parse_ring(&f.psi, "2 - b a - a. b. + b a a. b.").unwrap();
    ensure(l00 == want00, || format!("λ00(ababa) = {}", l00.render(&f.psi)))?;
    let all = all_nanowords(&s.spec, 4);
    for n in &all {
        ensure(lambda_by_paths(&s, n) == lambda_by_elimination(&s, n), || {
            format!("paths ≠ elimination for {}", n.display(&s.spec))
        })?;
    }
    Ok(format!("λ(ABAB) = {}; graded parts match; λ00(ababa) matches; paths = elimination on {} nanowords", l.render(&s.psi), all.len()))
}

pub fn tricolor_golden(moves: usize) -> Check {
    let s = two_free();
    for beta in BetaSet::enumerate(&s.spec) {
        ensure(census_is_trivial(&tricolor_census(&Nanoword::empty(), &beta)), || "empty census".into())?;
    }
    let n = Nanoword::parse("A1:a A2:a A3:a B:b :: A1 A2 B A3 A1 B A2 A3", &s.spec).unwrap();
    let beta = BetaSet::new(&s.spec, &[0, 1]).unwrap();
    ensure(is_tricoloring(&n, &beta, &[0, 0, 0, 1, 1, 2, 2, 1, 1]), || "printed coloring rejected".into())?;
    let c = tricolor_census(&n, &beta);
    ensure(c[0][1] >= 1, || format!("census {c:?}"))?;
    let betas = BetaSet::enumerate(&s.spec);
    let (done, bad) = invariance_sweep(7, &s.spec, moves, |a, b| {
        betas.iter().all(|beta| tricolor_census(a, beta) == tricolor_census(b, beta))
    });
    ensure(bad == 0, || format!("{bad} violations in {done} moves"))?;
    Ok(format!("empty census trivial; printed 0→1 coloring accepted; census invariant over {done} moves"))
}

pub fn sequence_golden() -> Check {
    let s = two_free();
    let abab = pattern("ABAB", &[('A', 0), ('B', 2)]);
    let got = characteristic_sequence(&s, &abab).map_err(|e| e.to_string())?;
    let want = parse_sequence(&s, "(a, b., b. a. b a, -b. a. a, -b. b a)").unwrap();
    ensure(got == want, || format!("ABAB → {}", got.render(&s)))?;

    let f = ab_free();
    let n = pattern("ABACBC", &[('A', 0), ('B', 1), ('C', 0)]);
    let got = characteristic_sequence(&f, &n).map_err(|e| e.to_string())?;
    let want = parse_sequence(&f, "(1, a., -a a., -1, a, a a., -a^2 a., a a., a^2 a.^2, -a a.^2, -a a.)").unwrap();
    ensure(got == want, || format!("ABACBC → {}", got.render(&f)))?;

    let n = pattern("ABCDCDAB", &[('A', 0), ('B', 2), ('C', 3), ('D', 1)]);
    let got = characteristic_sequence(&s, &n).map_err(|e| e.to_string())?;
    ensure(got.is_unit(), || format!("ABCDCDAB → {}", got.render(&s)))?;

    let all = all_nanowords(&s.spec, 4);
    for n in &all {
        let sum = characteristic_sequence(&s, n).unwrap().sum();
        ensure(sum == lambda_iota(&lambda(&s, n).unwrap()), || {
            format!("Σεψ ≠ ι(λ) for {}", n.display(&s.spec))
        })?;
    }
    Ok(format!("ABAB, ABACBC, ABCDCDAB match; Σεψ = ι(λ) on {} nanowords", all.len()))
}

pub fn oracle_golden() -> Check {
    let s = ab_free();
    let n = pattern("ABAB", &[('A', 0), ('B', 1)]);
    let t = std::time::Instant::now();
    let out = search(&n, &Nanoword::empty(), &s.spec, &SearchConfig::for_lengths(4, 0));
    ensure(out.verdict == Verdict::Equivalent, || "ABAB not contracted".into())?;
    let w = out.witness.unwrap();
    ensure(w.len() <= 6 && w.verify(&n, &Nanoword::empty(), &s.spec), || format!("witness {}", w.render(&s.spec)))?;
    let t1 = t.elapsed();

    let t = std::time::Instant::now();
    let a = plain(&s, "aabab");
    let b = pattern("AXAX", &[('A', 0), ('X', 0)]);
    let cfg = SearchConfig { max_len: 14, max_states: 200_000, shift: false, derived: true };
    let out = search(&a, &b, &s.spec, &cfg);
    ensure(out.verdict == Verdict::Equivalent, || format!("aabab vs AA'AA' unresolved: {:?}", out.stats))?;
    let w2 = out.witness.unwrap();
    ensure(w2.verify(&a, &b, &s.spec), || "aabab witness does not replay".into())?;
    let t2 = t.elapsed();
    ensure(t1.as_secs() < 60 && t2.as_secs() < 60, || "over 60 s".into())?;
    Ok(format!(
        "ABAB → ∅ in {} steps ({:.0?}); aabab ≃ AA'AA' in {} steps, {} states ({:.0?})",
        w.len(),
        t1,
        w2.len(),
        out.stats.states,
        t2
    ))
}

fn check_classes(c: &Classification, groups: &[&[&str]], contractible: &[&str]) -> Result<(), String> {
    ensure(c.unknown.is_empty(), || format!("{} UNKNOWN cells", c.unknown.len()))?;
    for g in groups {
        for w in &g[1..] {
            ensure(c.same_class(g[0], w), || format!("{} and {w} not joined", g[0]))?;
        }
    }
    for (i, g) in groups.iter().enumerate() {
        for h in &groups[i + 1..] {
            ensure(!c.same_class(g[0], h[0]), || format!("{} and {} joined", g[0], h[0]))?;
            ensure(c.separation(g[0], h[0]).is_some(), || format!("{} | {} has no certificate", g[0], h[0]))?;
        }
    }
    for g in groups {
        for w in *g {
            ensure(c.is_contractible(w) == contractible.contains(w), || format!("contractibility of {w}"))?;
            if !c.is_contractible(w) {
                let e = c.classes.iter().position(|k| k.contractible).ok_or("no contractible class")?;
                let rep = c.classes[e].members.first().ok_or("contractible class has no words")?;
                ensure(c.separation(w, rep).is_some(), || format!("{w} non-contractible without certificate"))?;
            }
        }
    }
    Ok(())
}

pub fn classify_golden() -> Check {
    let opts = ClassifyOptions { content: Some("aaabb".into()), ..Default::default() };
    let free = classify(&ab_free(), 5, &opts).map_err(|e| e.to_string())?;
    check_classes(
        &free,
        &[&["aaabb", "aabba", "abbaa", "bbaaa"], &["ababa"], &["aabab", "babaa", "baaab"], &["abaab"], &["baaba"]],
        &["ababa"],
    )
    .map_err(|e| format!("τ(a)=b: {e}"))?;
    let fixed = classify(&ab_fixed(), 5, &opts).map_err(|e| e.to_string())?;
    check_classes(
        &fixed,
        &[&["aaabb", "aabba", "abbaa", "bbaaa", "baaab"], &["ababa"], &["aabab"], &["abaab"], &["baaba"], &["babaa"]],
        &["aaabb", "aabba", "abbaa", "bbaaa", "baaab"],
    )
    .map_err(|e| format!("τ fixes a, b: {e}"))?;
    Ok(format!(
        "τ(a)=b: {} classes, τ fixes both: {} classes; every equivalence witnessed, every split certified, no UNKNOWN",
        free.classes.len(),
        fixed.classes.len()
    ))
}

/// A random skew pairing over `primed()` with injected annihilating elements
/// and twins.
pub fn random_pairing(r: &mut Rng8, s: &Setting) -> nanoword::pairing::AlphaPairing {
    use rand::Rng;
    let k = r.gen_range(0..5);
    let mut proj: Vec<usize> = (0..k).map(|_| r.gen_range(0..s.spec.len())).collect();
    let rand_elem = |r: &mut Rng8| {
        if r.gen_bool(0.3) {
            s.ab.identity()
        } else {
            s.ab.from_exponents(vec![r.gen_range(-2..=2), r.gen_range(-2..=2)])
        }
    };
    let n = k + 1;
    let mut b = vec![vec![s.ab.identity(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = rand_elem(r);
            b[j][i] = s.ab.inv(&x);
            b[i][j] = x;
        }
    }
    let grow = |b: &mut Vec<Vec<AbelianPi>>, proj: &mut Vec<usize>, row: Vec<AbelianPi>, p: usize| {
        for (i, r) in b.iter_mut().enumerate() {
            r.push(s.ab.inv(&row[i]));
        }
        let mut row = row;
        row.push(s.ab.identity());
        b.push(row);
        proj.push(p);
    };
    for _ in 0..r.gen_range(1..=2) {
        let m = b.len();
        let p = r.gen_range(0..s.spec.len());
        grow(&mut b, &mut proj, vec![s.ab.identity(); m], p);
    }
    for _ in 0..r.gen_range(1..=2) {
        let m = b.len();
        if m < 2 {
            break;
        }
        let i = r.gen_range(1..m);
        let row: Vec<AbelianPi> = (0..m).map(|j| b[i][j].clone()).collect();
        let p = s.spec.tau(proj[i - 1]);
        grow(&mut b, &mut proj, row, p);
    }
    let names = (0..proj.len()).map(|i| format!("E{i}")).collect();
    nanoword::pairing::AlphaPairing::new(names, proj, b).unwrap()
}

pub fn confluence(pairings: usize, orders: usize) -> Check {
    use nanoword::pairing::{pairing_isomorphic, reduce_with};
    use rand::Rng;
    let s = primed();
    let mut r = rng(11);
    let mut deletions = 0;
    for k in 0..pairings {
        let p = random_pairing(&mut r, &s);
        ensure(p.is_skew(&s.ab), || format!("pairing {k} is not skew"))?;
        let (first, _) = reduce_primitive(&p, &s.spec);
        for o in 0..orders {
            let (q, steps) = reduce_with(&p, &s.spec, |avail| r.gen_range(0..avail.len()));
            deletions += steps.len();
            ensure(pairing_isomorphic(&first, &q), || format!("pairing {k}, order {o}: primitives differ"))?;
        }
    }
    Ok(format!("{pairings} pairings × {orders} orders, {deletions} deletions, all primitives isomorphic"))
}

/// Move invariance of each invariant module over `moves` random moves.
pub fn module_invariance(s: &Setting, moves: usize, seed: u64) -> Vec<(&'static str, usize, usize)> {
    use nanoword::pairing::pairing_isomorphic;
    let spec = &s.spec;
    let prim = |n: &Nanoword| reduce_primitive(&build_pairing(s, n).unwrap(), spec).0;
    let mut out = Vec::new();
    let (d, b) = invariance_sweep(seed, spec, moves, |x, y| {
        gamma(s, x).unwrap() == gamma(s, y).unwrap()
            && self_linking(s, x).unwrap().protected() == self_linking(s, y).unwrap().protected()
    });
    out.push(("invariants (γ, self-linking)", d, b));
    let (d, b) = invariance_sweep(seed + 1, spec, moves, |x, y| pairing_isomorphic(&prim(x), &prim(y)));
    out.push(("pairing (primitive α-pairing)", d, b));
    let betas = BetaSet::enumerate(spec);
    let (d, b) = invariance_sweep(seed + 2, spec, moves, |x, y| {
        lambda(s, x).unwrap() == lambda(s, y).unwrap()
            && betas.iter().all(|beta| tricolor_census(x, beta) == tricolor_census(y, beta))
    });
    out.push(("linear (λ, tricolorings)", d, b));
    if spec.fixed_point_free() {
        let (d, b) = invariance_sweep(seed + 3, spec, moves, |x, y| {
            characteristic_sequence(s, x).unwrap() == characteristic_sequence(s, y).unwrap()
        });
        out.push(("kei (characteristic sequence)", d, b));
    }
    out
}

/// Pairing-based norm bound of `a^m` next to the unproved estimate
/// `[m/2][(m-1)/2] + 1` and the trivial upper bound `m(m-1)/2`.
pub fn monoliteral_norms(max_m: usize) -> Vec<(usize, usize, usize, usize)> {
    let s = two_free();
    (3..=max_m)
        .map(|m| {
            let n = nanoword::invariants::monoliteral(0, m);
            let bound = norm_lower_bound(&s, &n).unwrap();
            (m, bound, (m / 2) * ((m - 1) / 2) + 1, m * (m - 1) / 2)
        })
        .collect()
}
