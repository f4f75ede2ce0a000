use aybe_core::bd::*;
use aybe_core::builders::*;
use aybe_core::exact::{expand_in_u, int, rat, substitute, LaurentPoly, RatFunc, Rational, Substitution, Symbol};
use aybe_core::par::Exec;
use aybe_core::tensor::Tensor2;

fn structures(n: usize) -> Vec<AssocStructure> {
    enumerate_triples(n, 6, Exec::default()).unwrap().iter().flat_map(compatible_permutations).collect()
}

fn invert_x1() -> Substitution {
    Substitution::new().set_monomial(Symbol::X1, [-1, 0, 0, 0])
}

/// Coefficient of `u^k` of every entry.
fn u_coeff(m: &SpectralMatrix, k: i64) -> Tensor2<RatFunc> {
    let n = m.n();
    m.tensor().try_map(|v| Ok(expand_in_u(v, n, k.max(0))?.coeff(k))).unwrap()
}

#[test]
fn rst_examples() {
    let r = build_rst(2);
    let expect = Tensor2::from_terms(2, [([1, 1, 1, 1], rat(1, 2)), ([2, 2, 2, 2], rat(1, 2)), ([2, 1, 1, 2], int(1))]);
    assert_eq!(r, expect);
    for n in 2..=6 {
        let r = build_rst(n);
        assert_eq!(r.add(&r.flip21()), Tensor2::perm(n));
    }
}

#[test]
fn a_examples() {
    assert!(build_a(&BDTriple::trivial(4)).unwrap().is_zero());
    let a = build_a(&cg_triple(3, 1).unwrap()).unwrap();
    let expect = Tensor2::from_terms(3, [([2, 1, 2, 3], int(1)), ([2, 3, 2, 1], int(-1))]);
    assert_eq!(a, expect);
    for n in 2..=5 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            let a = build_a(&t).unwrap();
            assert_eq!(a.flip21(), a.neg());
        }
    }
}

#[test]
fn r_ts_unitarity_for_every_solution() {
    for n in 2..=5 {
        for t in enumerate_triples(n, 6, Exec::default()).unwrap() {
            for s in s_samples(&t).unwrap() {
                let r = build_r_ts(&t, &s).unwrap();
                assert_eq!(r.tensor.add(&r.tensor.flip21()), Tensor2::perm(n));
                assert!(r.tensor.is_weight_zero());
            }
        }
    }
    assert_eq!(build_r_ts(&BDTriple::trivial(3), &SWedge::zero(3)).unwrap().tensor, build_rst(3));
    let bad = SWedge::zero(3);
    assert!(matches!(build_r_ts(&cg_triple(3, 1).unwrap(), &bad), Err(aybe_core::Error::SNotSolution(_))));
}

#[test]
fn hat_r_examples() {
    let n = 3;
    let half_p: Tensor2<Rational> = Tensor2::perm(n).scale(&rat(1, 2));
    let y = LaurentPoly::var_pow(Symbol::Y1, 1);
    let f = RatFunc::new(LaurentPoly::one().add(&y), &LaurentPoly::one().sub(&y)).unwrap().scale_by(&rat(1, 2));
    assert_eq!(hat_r(&half_p).tensor(), &Tensor2::perm(n).scale(&f));
    let inv = Substitution::new().set_monomial(Symbol::Y1, [0, 0, -1, 0]);
    for t in enumerate_triples(3, 6, Exec::default()).unwrap() {
        for s in s_samples(&t).unwrap() {
            let h = hat_r(&build_r_ts(&t, &s).unwrap().tensor);
            let back = h.tensor().flip21().substitute(&inv).unwrap();
            assert!(h.tensor().add(&back).is_zero());
        }
    }
}

#[test]
fn ggs_formulas_agree_and_expand_to_r() {
    for n in 2..=4 {
        for a in structures(n) {
            let s0 = s0_from_structure(&a);
            let g = build_r_ggs_general(a.triple(), &s0).unwrap();
            let h = build_r_ggs_assoc(&a, &s0).unwrap();
            assert_eq!(g, h, "{a}");
            assert!(h.tensor().is_weight_zero());
            if n <= 3 {
                // q = e^{u/2}: R = 1 ⊗ 1 + u r_{T,s} + O(u²).
                assert_eq!(u_coeff(&h, 0), Tensor2::identity(n), "{a}");
                let r = build_r_ts(a.triple(), &s0).unwrap().tensor.to_ratfunc();
                assert_eq!(u_coeff(&h, 1), r, "{a}");
            }
        }
    }
}

#[test]
fn ggs_assoc_n2_is_standard() {
    let a = structures(2).remove(0);
    let r = build_r_ggs_assoc(&a, &SWedge::zero(2)).unwrap();
    assert_eq!(r, build_r_st_quantum(2));
}

#[test]
fn ggs_assoc_gauge_matches_conjugation() {
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    for phi in phi_space(a.triple()) {
        let s = s_with_phi(&a, &phi.scale(&rat(1, 3)));
        let g = build_r_ggs_general(a.triple(), &s).unwrap();
        let h = build_r_ggs_assoc(&a, &s).unwrap();
        assert_eq!(g, h);
    }
}

#[test]
fn inadmissible_s_rejected() {
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let s = s0_from_structure(&a).add(&SWedge::from_upper(3, &[int(1), int(0), int(0)]));
    assert!(matches!(build_r_ggs_assoc(&a, &s), Err(aybe_core::Error::InadmissibleS(_))));
    assert!(matches!(build_r_uv(&a, &s, RuvFormula::Gruv), Err(aybe_core::Error::InadmissibleS(_))));
}

#[test]
fn baxterization_limits() {
    let r = build_r_st_quantum(2);
    let b = baxterize(&r);
    assert!(b.uses(Symbol::Y1));
    // Y1 = 0 kills the spectral term.
    let zero_y = Substitution::new().set(Symbol::Y1, RatFunc::zero());
    assert_eq!(b.tensor().substitute(&zero_y).unwrap(), *r.tensor());
}

#[test]
fn y_examples() {
    let a = structures(2).remove(0);
    let y = build_y(&a).unwrap();
    // n = 2: X1 = e^{u/4}.
    let den = LaurentPoly::one().sub(&LaurentPoly::var_pow(Symbol::X1, -4));
    let diag = |e: i32| RatFunc::var_pow(Symbol::X1, e).div_poly(&den).unwrap();
    let expect = Tensor2::from_terms(
        2,
        [
            ([1, 1, 1, 1], diag(0)),
            ([2, 2, 2, 2], diag(0)),
            ([1, 1, 2, 2], diag(-2)),
            ([2, 2, 1, 1], diag(-2)),
            ([2, 1, 1, 2], RatFunc::one()),
        ],
    );
    assert_eq!(y.tensor(), &expect);
    for n in 2..=4 {
        for a in structures(n) {
            let y = build_y(&a).unwrap();
            let lhs = y.tensor().substitute(&invert_x1()).unwrap().add(&y.tensor().flip21());
            assert_eq!(lhs, Tensor2::perm(n), "{a}");
        }
    }
}

#[test]
fn r_uv_formulas_agree_and_lift() {
    for n in 2..=3 {
        for a in structures(n) {
            let s0 = s0_from_structure(&a);
            let r = build_r_uv_checked(&a, &s0).unwrap();
            assert!(r.tensor().is_weight_zero());
            assert_eq!(u_coeff(&r, -1), Tensor2::identity(n));
            let hat = hat_r(&build_r_ts(a.triple(), &s0).unwrap().tensor);
            assert_eq!(&u_coeff(&r, 0), hat.tensor(), "{a}");
            // (q − q⁻¹) r = R_BGGS.
            let lhs = r.tensor().map(|v| v.mul_poly(&q_minus_qinv(n)));
            assert_eq!(&lhs, baxterize(&build_r_ggs_assoc(&a, &s0).unwrap()).tensor());
        }
    }
}

#[test]
fn r_uv_with_gauge_agrees() {
    let a = compatible_permutations(&cg_triple(3, 2).unwrap()).remove(0);
    for phi in phi_space(a.triple()) {
        let s = s_with_phi(&a, &phi.scale(&rat(2, 5)));
        build_r_uv_checked(&a, &s).unwrap();
    }
}

#[test]
fn json_round_trip() {
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let s = s_with_phi(&a, &phi_space(a.triple())[0].scale(&rat(1, 5)));
    let r = build_r_uv(&a, &s, RuvFormula::Afgq).unwrap();
    let doc = MatrixDoc::from_matrix(&r, None);
    let text = serde_json::to_string(&doc).unwrap();
    let back: MatrixDoc = serde_json::from_str(&text).unwrap();
    let m = back.to_matrix().unwrap();
    assert_eq!(m, r);
    assert_eq!(serde_json::to_string(&MatrixDoc::from_matrix(&m, None)).unwrap(), text);
}

#[test]
fn substitution_commutes_with_build() {
    // r(u, v) at Y1 ↦ Y1⁻¹ stays a finite tensor of the same support.
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let r = build_r_uv(&a, &s0_from_structure(&a), RuvFormula::Gruv).unwrap();
    let inv = Substitution::new().set_monomial(Symbol::Y1, [0, 0, -1, 0]);
    let t = r.tensor().substitute(&inv).unwrap();
    assert_eq!(t.len(), r.tensor().len());
    let _ = substitute(&RatFunc::one(), &inv).unwrap();
}
