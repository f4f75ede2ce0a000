use aybe_core::bd::*;
use aybe_core::builders::*;
use aybe_core::exact::{int, rat, LaurentPoly, RatFunc, Rational, Symbol};
use aybe_core::par::Exec;
use aybe_core::tensor::{Tensor2, Tensor3};
use aybe_core::verify::*;

fn structures(n: usize) -> Vec<AssocStructure> {
    enumerate_triples(n, 6, Exec::default()).unwrap().iter().flat_map(compatible_permutations).collect()
}

fn reversing_triple() -> BDTriple {
    BDTriple::new(5, &[(1, 4), (2, 3)]).unwrap()
}

fn y1() -> LaurentPoly {
    LaurentPoly::var_pow(Symbol::Y1, 1)
}

/// `1 / (1 − e^{−u})`, i.e. `1/u + 1/2 + O(u)`.
fn inv_one_minus_exp_neg_u(n: usize) -> RatFunc {
    RatFunc::new(LaurentPoly::one(), &LaurentPoly::one().sub(&LaurentPoly::var_pow(Symbol::X1, -2 * n as i32))).unwrap()
}

/// Dense oracle for `a¹² b¹³ ...` on explicit `n³ × n³` matrices.
mod dense {
    use aybe_core::exact::Rational;
    use aybe_core::tensor::{Tensor2, Tensor3};
    use num_traits::Zero;

    pub type M = Vec<Vec<Rational>>;

    fn idx(n: usize, a: usize, b: usize, c: usize) -> usize {
        ((a - 1) * n + (b - 1)) * n + (c - 1)
    }

    /// `r` on legs `(p, q)` of three.
    pub fn embed(r: &Tensor2<Rational>, p: usize, q: usize) -> M {
        let n = r.n();
        let d = n * n * n;
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (&[i, j, k, l], v) in r.iter() {
            for x in 1..=n {
                let mut row = [x; 3];
                let mut col = [x; 3];
                row[p] = i;
                col[p] = j;
                row[q] = k;
                col[q] = l;
                m[idx(n, row[0], row[1], row[2])][idx(n, col[0], col[1], col[2])] += v;
            }
        }
        m
    }

    pub fn mul(a: &M, b: &M) -> M {
        let d = a.len();
        let mut out = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            for k in 0..d {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..d {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
        out
    }

    pub fn add(a: &M, b: &M, sign: i64) -> M {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q * Rational::from_integer(sign.into())).collect())
            .collect()
    }

    pub fn to_tensor(n: usize, m: &M) -> Tensor3<Rational> {
        let mut t = Tensor3::zero(n);
        let r = |a: usize| ((a / (n * n)) + 1, (a / n) % n + 1, a % n + 1);
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let (a, b, c) = r(i);
                    let (x, y, z) = r(j);
                    t.insert([a, x, b, y, c, z], v.clone());
                }
            }
        }
        t
    }
}

#[test]
fn cybe_examples() {
    for n in 2..=4 {
        assert!(cybe_residual(&build_rst(n)).unwrap().is_zero());
    }
    // e₁₂ ⊗ e₁₂ has all products zero; e₁₂ ⊗ e₂₁ does not.
    assert!(cybe_residual(&Tensor2::from_terms(2, [([1, 2, 1, 2], int(1))])).unwrap().is_zero());
    let r = Tensor2::from_terms(2, [([1, 2, 2, 1], int(1))]);
    let res = cybe_residual(&r).unwrap();
    // Dense oracle: [r12, r13] + [r12, r23] + [r13, r23].
    let (a, b, c) = (dense::embed(&r, 0, 1), dense::embed(&r, 0, 2), dense::embed(&r, 1, 2));
    let comm = |x: &dense::M, y: &dense::M| dense::add(&dense::mul(x, y), &dense::mul(y, x), -1);
    let sum = dense::add(&dense::add(&comm(&a, &b), &comm(&a, &c), 1), &comm(&b, &c), 1);
    assert_eq!(res, dense::to_tensor(2, &sum));
    assert!(!res.is_zero());
    let w = Witness::from_tensor3(&res).unwrap();
    assert_eq!(w.index, vec![1, 2, 1, 1, 2, 1]);
    assert_eq!(w.value, "-1");
}

#[test]
fn r_ts_solves_cybe_for_full_basis() {
    for n in 2..=4 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            for s in s_samples(&t).unwrap() {
                let r = build_r_ts(&t, &s).unwrap().tensor;
                assert!(cybe_residual(&r).unwrap().is_zero(), "{t}");
            }
        }
    }
}

#[test]
fn embedded_products_match_dense_oracle() {
    let t = cg_triple(3, 1).unwrap();
    let r = build_r_ts(&t, &s_samples(&t).unwrap()[1]).unwrap().tensor;
    let got = associative_combination(&r).unwrap();
    let (a, b, c) = (dense::embed(&r, 0, 1), dense::embed(&r, 0, 2), dense::embed(&r, 1, 2));
    let expect = dense::add(&dense::add(&dense::mul(&a, &b), &dense::mul(&c, &a), -1), &dense::mul(&b, &c), 1);
    assert_eq!(got, dense::to_tensor(3, &expect));
}

#[test]
fn spectral_cybe_and_overlap_identity() {
    for n in 2..=3 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            for s in s_samples(&t).unwrap() {
                let r = build_r_ts(&t, &s).unwrap().tensor;
                let h = hat_r(&r);
                assert!(cybe_spectral_residual(&h).unwrap().is_zero(), "{t}");
                assert!(unitarity_check(&h, UnitarityKind::Classical).unwrap().passed());
                // The associative combination of r̂ is v-independent.
                let r0 = SpectralMatrix::new(h.tensor().clone());
                let zero = SpectralMatrix::new(Tensor2::zero(n));
                let lhs = r01_residual(&r0, &zero).unwrap();
                assert_eq!(lhs, associative_combination(&r).unwrap().map(|c| RatFunc::constant(c.clone())), "{t}");
            }
        }
    }
    // ½P is not a constant solution, so its spectral lift fails too.
    let half_p = Tensor2::perm(3).scale(&rat(1, 2));
    assert!(!cybe_residual(&half_p).unwrap().is_zero());
    assert!(!cybe_spectral_residual(&hat_r(&half_p)).unwrap().is_zero());
}

#[test]
fn unitarity_failure_has_witness() {
    let f = RatFunc::new(LaurentPoly::one(), &LaurentPoly::one().sub(&y1())).unwrap();
    let r = SpectralMatrix::new(Tensor2::perm(2).scale(&f));
    let rep = unitarity_check(&r, UnitarityKind::Classical).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.witness.unwrap().index, vec![1, 1, 1, 1]);
}

#[test]
fn qybe_and_hecke_examples() {
    for n in 2..=4 {
        let r = build_r_st_quantum(n);
        assert!(qybe_residual(&r).unwrap().is_zero());
        assert!(hecke_residual(&r).unwrap().is_zero());
    }
    let one = SpectralMatrix::new(Tensor2::identity(3));
    assert!(qybe_residual(&one).unwrap().is_zero());
    // 1⊗1 is not Hecke: (P − q)(P + q⁻¹) = (q⁻¹ − q) P.
    let h = hecke_residual(&one).unwrap();
    assert_eq!(h, Tensor2::perm(3).scale(&RatFunc::from(q_minus_qinv(3)).neg()));
    // q P satisfies it trivially: P R = q (1⊗1).
    let qp = SpectralMatrix::new(Tensor2::perm(2).scale(&q_pow(2, &int(1)).unwrap()));
    assert!(hecke_residual(&qp).unwrap().is_zero());
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let g = build_r_ggs_general(a.triple(), &s0_from_structure(&a)).unwrap();
    assert!(qybe_residual(&g).unwrap().is_zero());
    assert!(hecke_residual(&g).unwrap().is_zero());
}

#[test]
fn baxterized_matrices_solve_spectral_qybe() {
    for n in 2..=3 {
        for a in structures(n) {
            let b = baxterize(&build_r_ggs_assoc(&a, &s0_from_structure(&a)).unwrap());
            assert!(qybe_residual(&b).unwrap().is_zero(), "{a}");
        }
    }
}

#[test]
fn aybe_and_lift_for_small_structures() {
    for n in 2..=3 {
        for a in structures(n) {
            let s0 = s0_from_structure(&a);
            let r = build_r_uv(&a, &s0, RuvFormula::Afgq).unwrap();
            assert!(aybe_residual(&r).unwrap().is_zero(), "{a}");
            assert!(unitarity_check(&r, UnitarityKind::Associative).unwrap().passed(), "{a}");
            assert!(check_lift(&r, a.triple(), &s0).unwrap().passed(), "{a}");
            assert!(pr_limit_check(&r).unwrap().passed(), "{a}");
            // For unitary r the reversed equation also holds and the
            // difference is the commutator sum.
            let rev = aybe_reversed_residual(&r).unwrap();
            assert!(rev.is_zero());
            assert!(aybe_commutator_sum(&r).unwrap().is_zero());
        }
    }
}

#[test]
fn aybe_difference_is_commutator_sum() {
    // Holds for any r; exercised on a non-solution.
    let n = 2;
    let f = RatFunc::new(y1().add(&LaurentPoly::var_pow(Symbol::X1, 1)), &LaurentPoly::one().sub(&y1())).unwrap();
    let r = SpectralMatrix::new(Tensor2::from_terms(n, [([1, 2, 2, 1], f.clone()), ([1, 1, 2, 2], RatFunc::one())]));
    let diff = aybe_residual(&r).unwrap().sub(&aybe_reversed_residual(&r).unwrap());
    let comm = aybe_commutator_sum(&r).unwrap();
    assert!(!comm.is_zero());
    assert_eq!(diff, comm);
}

#[test]
fn lift_examples() {
    let a = structures(2).remove(0);
    let s0 = s0_from_structure(&a);
    let r = build_r_uv(&a, &s0, RuvFormula::Gruv).unwrap();
    let n = 2;
    // e^u − 1 = O(u) leaves both checked coefficients unchanged.
    let e_u_minus_1 = RatFunc::from(LaurentPoly::var_pow(Symbol::X1, 2 * n as i32).sub(&LaurentPoly::one()));
    let shifted = SpectralMatrix::new(r.tensor().add(&Tensor2::identity(n).scale(&e_u_minus_1)));
    assert!(check_lift(&shifted, a.triple(), &s0).unwrap().passed());
    let extra = SpectralMatrix::new(r.tensor().add(&Tensor2::identity(n).scale(&inv_one_minus_exp_neg_u(n))));
    let rep = check_lift(&extra, a.triple(), &s0).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.witness.unwrap().index, vec![1, 1, 1, 1]);
    // A double pole is an error.
    let sq = inv_one_minus_exp_neg_u(n).pow(2).unwrap();
    let double = SpectralMatrix::new(Tensor2::identity(n).scale(&sq));
    assert!(matches!(check_lift(&double, a.triple(), &s0), Err(aybe_core::Error::PoleOrder { .. })));
}

#[test]
fn r01_examples() {
    let a = structures(2).remove(0);
    let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Afgq).unwrap();
    let (r0, r1) = semiclassical_parts(&r).unwrap();
    assert!(check_r01(&r0, &r1).unwrap().passed());
    let n = 2;
    let shift = |c: RatFunc| SpectralMatrix::new(r1.tensor().add(&Tensor2::identity(n).scale(&c)));
    let rep = check_r01(&r0, &shift(RatFunc::constant(rat(1, 3)))).unwrap();
    assert!(!rep.passed());
    // 3c on the scalar part.
    let res = r01_residual(&r0, &shift(RatFunc::constant(rat(1, 3)))).unwrap();
    assert_eq!(res.coeff(&[1, 1, 1, 1, 1, 1]), RatFunc::constant(int(-1)));
    // e^v − 1 is not additive either.
    assert!(!check_r01(&r0, &shift(RatFunc::from(y1().sub(&LaurentPoly::one())))).unwrap().passed());
    for n in 2..=3 {
        for a in structures(n) {
            let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Gruv).unwrap();
            let (r0, r1) = semiclassical_parts(&r).unwrap();
            assert!(check_r01(&r0, &r1).unwrap().passed(), "{a}");
        }
    }
}

#[test]
fn pr_limit_examples() {
    let n = 2;
    let p0y = Tensor2::p0(n).scale(&RatFunc::from(y1()));
    let r = SpectralMatrix::new(Tensor2::identity(n).scale(&inv_one_minus_exp_neg_u(n)).add(&p0y));
    let rep = pr_limit_check(&r).unwrap();
    assert!(!rep.passed());
    // A pole on a traceless part survives.
    let bad = SpectralMatrix::new(Tensor2::p0(n).scale(&inv_one_minus_exp_neg_u(n)));
    assert!(matches!(pr_limit_check(&bad), Err(aybe_core::Error::PoleSurvivesProjection)));
    // No u-dependence: the verdict is that of the classical matrix.
    for t in enumerate_triples(3, 6, Exec::default()).unwrap() {
        let r = build_r_ts(&t, &s_samples(&t).unwrap()[0]).unwrap().tensor;
        assert!(pr_limit_check(&hat_r(&r)).unwrap().passed());
    }
    let not_cybe = hat_r(&Tensor2::perm(2).scale(&rat(1, 2)).add(&Tensor2::unit(2, [1, 2, 1, 2], int(1))));
    assert!(!pr_limit_check(&not_cybe).unwrap().passed());
}

#[test]
fn cab_passes_for_associative_and_fails_on_reversal() {
    for n in 2..=4 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            for a in compatible_permutations(&t) {
                let r = build_r_ts(&t, &s0_from_structure(&a)).unwrap().tensor;
                assert!(cab_check(&r).unwrap().is_zero(), "{a}");
            }
        }
    }
    let t = reversing_triple();
    for s in s_samples(&t).unwrap() {
        let res = cab_check(&build_r_ts(&t, &s).unwrap().tensor).unwrap();
        // T(α₁) = α₄, T(α₂) = α₃: i = 1, j = 4.
        assert_eq!(res.coeff(&[3, 1, 3, 4, 4, 5]), int(1));
    }
}

#[test]
fn non_associative_triples_fail_cab() {
    for n in 2..=5 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            if is_associative(&t) {
                continue;
            }
            for s in s_samples(&t).unwrap() {
                assert!(!cab_check(&build_r_ts(&t, &s).unwrap().tensor).unwrap().is_zero(), "{t}");
            }
        }
    }
}

#[test]
fn generic_s_for_trivial_triple_fails_on_diagonal() {
    let t = BDTriple::trivial(3);
    let s = SWedge::from_upper(3, &[rat(1, 7), rat(2, 5), rat(-1, 3)]);
    let res = cab_check(&build_r_ts(&t, &s).unwrap().tensor).unwrap();
    assert!(!res.is_zero());
    assert!(res.iter().any(|([i, j, k, l, m, p], _)| i == j && k == l && m == p));
}

#[test]
fn t_prime_reconstructs_tilde_t() {
    for n in 2..=5 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            let phis = phi_space(&t);
            for a in compatible_permutations(&t) {
                let mut ss = vec![s0_from_structure(&a)];
                ss.extend(phis.iter().map(|p| s_with_phi(&a, &p.scale(&rat(2, 3)))));
                for s in ss {
                    let r = build_r_ts(&t, &s).unwrap().tensor;
                    for i in 2..=n {
                        for j in 2..=n {
                            if i != j {
                                let v = t_prime(&r, i, j);
                                assert!(v == rat(1, 2) || v == rat(-1, 2));
                            }
                        }
                    }
                    assert_eq!(reconstruct_tilde_t(&r).unwrap(), a.tilde_t(), "{a}");
                }
            }
        }
    }
}

#[test]
fn gauge_preserves_aybe() {
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Afgq).unwrap();
    for (k, phi) in phi_space(a.triple()).iter().enumerate() {
        let g = SpectralMatrix::new(r.tensor().gauge_conjugate(&phi.scale(&rat(k as i64 + 1, 3))).unwrap());
        assert!(aybe_residual(&g).unwrap().is_zero());
        assert!(unitarity_check(&g, UnitarityKind::Associative).unwrap().passed());
    }
}

#[test]
fn baxterization_family() {
    // y(u) + f(v) P with f = 1/(e^{−v} − 1) solves; f = 1 does not.
    let a = structures(2).remove(0);
    let y = build_y(&a).unwrap();
    let n = 2;
    let f = spectral_factor();
    let good = SpectralMatrix::new(y.tensor().add(&Tensor2::perm(n).scale(&f)));
    assert!(aybe_residual(&good).unwrap().is_zero());
    let bad = SpectralMatrix::new(y.tensor().add(&Tensor2::perm(n)));
    let res = aybe_residual(&bad).unwrap();
    assert!(!res.is_zero());
}

#[test]
fn numeric_examples() {
    let cfg = NumericConfig { samples: 20, seed: 3, ..Default::default() };
    let a = compatible_permutations(&cg_triple(4, 1).unwrap()).remove(0);
    let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Afgq).unwrap();
    for id in [NumericIdentity::Aybe, NumericIdentity::Unitarity] {
        let rep = numeric_residual(id, &r, &cfg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let q = build_r_st_quantum(10);
    for id in [NumericIdentity::Qybe, NumericIdentity::Hecke] {
        assert!(numeric_residual(id, &q, &cfg).unwrap().passed());
    }
    // The same seed gives the same report under either policy.
    let seq = numeric_residual(NumericIdentity::Aybe, &r, &NumericConfig { exec: Exec::Sequential, ..cfg }).unwrap();
    let par = numeric_residual(NumericIdentity::Aybe, &r, &NumericConfig { exec: Exec::Parallel, ..cfg }).unwrap();
    assert_eq!(seq, par);
}

/// `½ coth(u/2) 1⊗1 + r̂(v)`: the naive lift of a constant solution.
fn naive_lift(r: &Tensor2<Rational>) -> SpectralMatrix {
    let n = r.n();
    let e = LaurentPoly::var_pow(Symbol::X1, -2 * n as i32);
    let coth = RatFunc::new(LaurentPoly::one().add(&e), &LaurentPoly::one().sub(&e)).unwrap().scale_by(&rat(1, 2));
    SpectralMatrix::new(hat_r(r).tensor().add(&Tensor2::identity(n).scale(&coth)))
}

#[test]
fn numeric_detects_reversal_obstruction() {
    let t = reversing_triple();
    let s = s_samples(&t).unwrap().remove(0);
    let r = naive_lift(&build_r_ts(&t, &s).unwrap().tensor);
    let rep = numeric_residual(NumericIdentity::Aybe, &r, &NumericConfig { samples: 5, ..Default::default() }).unwrap();
    assert!(!rep.passed());
    assert!(rep.max_abs_residual.unwrap() > 1e-3);
}

#[test]
fn symbolic_pass_implies_numeric_pass() {
    let cfg = NumericConfig { samples: 10, seed: 11, ..Default::default() };
    for n in 2..=3 {
        for a in structures(n) {
            let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Afgq).unwrap();
            assert!(numeric_residual(NumericIdentity::Aybe, &r, &cfg).unwrap().passed());
            let g = build_r_ggs_assoc(&a, &s0_from_structure(&a)).unwrap();
            assert!(numeric_residual(NumericIdentity::Qybe, &g, &cfg).unwrap().passed());
            assert!(numeric_residual(NumericIdentity::Hecke, &g, &cfg).unwrap().passed());
        }
    }
}

#[test]
fn report_json_shape() {
    let rep = VerifyReport::from_residual3("cab", &Tensor3::from_terms(5, [([3, 1, 3, 4, 4, 5], int(1))]));
    assert_eq!(rep.witness.as_ref().unwrap().to_string(), "(3,3,4|1,4,5)=1");
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["result"], "fail");
    assert_eq!(v["mode"], "symbolic");
    let back: VerifyReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, rep);
}
