use dynkin_ar::kostant::commutator_nullity;
use dynkin_ar::minors::quasi_commute;
use dynkin_ar::preproj::{ext_dim_lambda_via_coker, ext_dim_lambda_via_forms, sampled_dual, GENERIC_ATTEMPTS};
use dynkin_ar::{ClusterMonomial, Context, DynkinType, FpContext, Field, KostantPartition, Matrix, MinorIndex, PrimeField, Quiver, Root, RootSystem};
use proptest::prelude::*;
use std::sync::OnceLock;

fn shifted_jordan(n: usize, extra: &[i64]) -> Matrix<PrimeField> {
    let mut m = Matrix::zeros(n, n);
    let mut it = extra.iter().cycle();
    for i in 0..n {
        for j in i + 1..n {
            m[(i, j)] = PrimeField::from_i64(if j == i + 1 { 1 } else { *it.next().unwrap() });
        }
    }
    m
}

fn d4() -> &'static FpContext {
    static CTX: OnceLock<FpContext> = OnceLock::new();
    CTX.get_or_init(|| Context::new(RootSystem::new(Quiver::bipartite(DynkinType::D(4)).unwrap()).unwrap()))
}

fn a4() -> &'static FpContext {
    static CTX: OnceLock<FpContext> = OnceLock::new();
    CTX.get_or_init(|| Context::new(RootSystem::new(Quiver::linear(DynkinType::A(4)).unwrap()).unwrap()))
}

fn minors(rs: &RootSystem) -> Vec<MinorIndex> {
    let n = rs.num_roots();
    let mut out = Vec::new();
    for l in 1..=n {
        for j in 0..l {
            let m = MinorIndex::new(j, l);
            if m.validate(rs).is_ok() {
                out.push(m);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutator_nullity_is_min(r in 1usize..=8, t in 1usize..=8, x in prop::collection::vec(-20i64..=20, 1..30), y in prop::collection::vec(-20i64..=20, 1..30)) {
        let first = commutator_nullity(r, t, &shifted_jordan(r, &x), &shifted_jordan(t, &y)).unwrap();
        let second = commutator_nullity(r, t, &shifted_jordan(r, &y), &shifted_jordan(t, &x)).unwrap();
        prop_assert_eq!(first.nullity, r.min(t));
        prop_assert_eq!(second.nullity, first.nullity);
    }

    #[test]
    fn forms_and_coxeter(a in prop::collection::vec(-5i64..=5, 4), b in prop::collection::vec(-5i64..=5, 4)) {
        let rs = d4().root_system();
        prop_assert_eq!(rs.sym_form(&a, &b), rs.euler_form(&a, &b) + rs.euler_form(&b, &a));
        prop_assert_eq!(rs.coxeter_inverse(&rs.coxeter(&a)), a.clone());
        // ⟨a, b⟩ = -⟨b, C a⟩
        prop_assert_eq!(rs.euler_form(&a, &b), -rs.euler_form(&b, &rs.coxeter(&a)));
    }

    #[test]
    fn two_routes_agree_on_kostant_pairs(x in prop::collection::vec(0usize..12, 1..4), y in prop::collection::vec(0usize..12, 1..4), seed: u64) {
        let ctx = d4();
        let rs = ctx.root_system();
        let lam = KostantPartition::new(x.into_iter().map(Root).collect());
        let kap = KostantPartition::new(y.into_iter().map(Root).collect());
        let m = sampled_dual(rs, &ctx.module(lam.parts()), seed, GENERIC_ATTEMPTS);
        let n = sampled_dual(rs, &ctx.module(kap.parts()), seed ^ 1, GENERIC_ATTEMPTS);
        prop_assert_eq!(ext_dim_lambda_via_coker(rs.quiver(), &m, &n).unwrap(), ext_dim_lambda_via_forms(rs, &m, &n).unwrap());
    }

    #[test]
    fn quasi_commute_is_symmetric_and_ignores_exponents(i in 0usize..100, j in 0usize..100, k in 0usize..100, e in 1u32..4) {
        let ctx = a4();
        let rs = ctx.root_system();
        let all = minors(rs);
        let (a, b, c) = (all[i % all.len()], all[j % all.len()], all[k % all.len()]);
        let z1 = ClusterMonomial::new(vec![(a, 1), (b, 1)]).unwrap();
        let z1e = ClusterMonomial::new(vec![(a, e), (b, e + 1)]).unwrap();
        let z2 = ClusterMonomial::new(vec![(c, e)]).unwrap();
        let v = quasi_commute(rs, ctx.table(), &z1, &z2).unwrap();
        prop_assert_eq!(v.quasi_commuting, quasi_commute(rs, ctx.table(), &z2, &z1).unwrap().quasi_commuting);
        prop_assert_eq!(v.quasi_commuting, quasi_commute(rs, ctx.table(), &z1e, &z2).unwrap().quasi_commuting);
    }
}

#[test]
fn quasi_commute_agrees_with_oracle() {
    let ctx = a4();
    let rs = ctx.root_system();
    let all = minors(rs);
    let duals: Vec<_> = all
        .iter()
        .map(|&m| ctx.determinantal(&dynkin_ar::minors::minor_to_partition(rs, m).unwrap().partition, 5).unwrap())
        .collect();
    for (x, &a) in all.iter().enumerate() {
        for (y, &b) in all.iter().enumerate() {
            let z1 = ClusterMonomial::new(vec![(a, 2)]).unwrap();
            let z2 = ClusterMonomial::new(vec![(b, 1)]).unwrap();
            let verdict = quasi_commute(rs, ctx.table(), &z1, &z2).unwrap().quasi_commuting;
            assert_eq!(verdict, ctx.oracle(&duals[x], &duals[y]).unwrap().via_forms == 0, "{a} {b}");
        }
    }
}
