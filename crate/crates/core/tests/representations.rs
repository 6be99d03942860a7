use dynkin_ar::{Context, DynkinType, Error, FpContext, Quiver, RatContext, Root, RootSystem};

fn quivers() -> Vec<Quiver> {
    let mut out = Vec::new();
    for t in [DynkinType::A(2), DynkinType::A(3), DynkinType::A(4), DynkinType::D(4)] {
        out.push(Quiver::linear(t).unwrap());
        out.push(Quiver::bipartite(t).unwrap());
    }
    out
}

fn ctx(q: Quiver) -> FpContext {
    Context::new(RootSystem::new(q).unwrap())
}

#[test]
fn euler_identity_vanishing_and_ar_duality() {
    for q in quivers() {
        let c = ctx(q);
        let (rs, t) = (c.root_system(), c.table());
        for a in rs.roots() {
            for b in rs.roots() {
                let lhs = t.hom(a, b) as i64 - t.ext(a, b) as i64;
                assert_eq!(lhs, rs.euler_form(rs.coords(a), rs.coords(b)));
                if a < b {
                    assert_eq!(t.hom(a, b), 0);
                    assert_eq!(t.ext(b, a), 0);
                }
                if let Some(tb) = rs.tau_root(b) {
                    assert_eq!(t.hom(a, tb), t.ext(b, a));
                }
                if let Some(ta) = rs.tau_root(a) {
                    assert_eq!(t.hom(a, b), t.ext(b, ta));
                }
            }
        }
    }
}

#[test]
fn interval_rules_in_type_a() {
    for n in 2..=4 {
        let c = ctx(Quiver::linear(DynkinType::A(n)).unwrap());
        let (rs, t) = (c.root_system(), c.table());
        for a in rs.roots() {
            let (i, j) = rs.segment(a).unwrap();
            for b in rs.roots() {
                let (k, l) = rs.segment(b).unwrap();
                assert_eq!(t.hom(a, b) == 1, k <= i && i <= l && l <= j, "hom {a:?} {b:?}");
                assert_eq!(t.ext(b, a) == 1, k < i && i <= l + 1 && l < j, "ext {b:?} {a:?}");
            }
        }
    }
}

#[test]
fn four_cases_match_root_arithmetic() {
    for q in quivers() {
        let c = ctx(q);
        let (rs, t) = (c.root_system(), c.table());
        let mut flagged = 0;
        for a in rs.roots() {
            for b in rs.roots().filter(|&b| b > a) {
                match rs.classify_root_pair(a, b, |x, y| t.hom(x, y)) {
                    Ok(case) => assert!(rs.case_matches_arithmetic(a, b, case)),
                    Err(Error::MultiplicityViolation { value, .. }) => {
                        assert!(value > 1);
                        flagged += 1;
                        continue;
                    }
                    Err(e) => panic!("{e}"),
                }
                let pairing = t.hom(b, a) as i64 - t.hom_to_tau(rs, b, a) as i64;
                assert_eq!(rs.sym_form(rs.coords(a), rs.coords(b)), pairing);
                if t.hom(b, a) == 0 {
                    assert!(rs.check_sum_lemma(a, b));
                }
            }
        }
        if matches!(rs.quiver().dynkin(), DynkinType::A(_)) {
            assert_eq!(flagged, 0);
        }
    }
}

#[test]
fn rational_and_prime_tables_agree() {
    for q in [Quiver::bipartite(DynkinType::D(4)).unwrap(), Quiver::from_orientation(DynkinType::A(4), "1>2,3>2,3<4").unwrap()] {
        let rs = RootSystem::new(q).unwrap();
        let a: RatContext = Context::new(rs.clone());
        let b: FpContext = Context::new(rs);
        assert_eq!(a.table(), b.table());
        let r = Root(0);
        assert_eq!(a.indecomposable(r).dim_vector(), b.indecomposable(r).dim_vector());
    }
}
