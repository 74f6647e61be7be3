mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tpbc::bezier::{boundary_differences, finite_differences, nets_equal_up_to_symmetry, MonomialForm, NetSymmetry};
use tpbc::blossom::BilinearReparam;
use tpbc::fixtures::*;
use tpbc::geom::{collinear, coplanar};
use tpbc::scalar::rat;
use tpbc::{BezierCurve3, ControlNet, Error, Rat, RatNet, Vec3};

fn v(x: &str, y: &str, z: &str) -> Vec3<Rat> {
    Vec3::new(r(x), r(y), r(z))
}

// S(u,v) = sum c_ij u^i v^j, summed directly
fn power_eval(net: &RatNet, u: &Rat, w: &Rat) -> Vec3<Rat> {
    let mono = net.to_monomial();
    let (n, m) = net.degree();
    let mut acc = Vec3::zero();
    for i in 0..=n {
        for j in 0..=m {
            let k = tpbc::scalar::pow(u, i) * tpbc::scalar::pow(w, j);
            acc = acc + mono.coeff(i, j).scale(&k);
        }
    }
    acc
}

fn bilinear_unit_net() -> RatNet {
    ControlNet::from_grid(vec![vec![v("0", "0", "0"), v("0", "1", "0")], vec![v("1", "0", "0"), v("1", "1", "1")]]).unwrap()
}

#[test]
fn corner_interpolation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let net = random_net(&mut rng, 3, 2);
    let (zero, one) = (rat(0, 1), rat(1, 1));
    assert_eq!(net.evaluate(&zero, &zero), *net.point(0, 0));
    assert_eq!(net.evaluate(&one, &zero), *net.point(3, 0));
    assert_eq!(net.evaluate(&zero, &one), *net.point(0, 2));
    assert_eq!(net.evaluate(&one, &one), *net.point(3, 2));
}

#[test]
fn first_example_far_corner() {
    let s1 = example1_s1();
    assert_eq!(s1.evaluate(&rat(1, 1), &rat(1, 1)), v("4", "3", "3/4"));
}

#[test]
fn first_example_against_power_basis() {
    let s1 = example1_s1();
    let h = rat(1, 2);
    assert_eq!(s1.evaluate(&h, &h), power_eval(&s1, &h, &h));
    assert_eq!(s1.evaluate(&r("-1/3"), &r("5/7")), power_eval(&s1, &r("-1/3"), &r("5/7")));
}

#[test]
fn monomial_of_bilinear_net() {
    let mono = bilinear_unit_net().to_monomial();
    assert_eq!(*mono.coeff(0, 0), Vec3::zero());
    assert_eq!(*mono.coeff(1, 0), v("1", "0", "0"));
    assert_eq!(*mono.coeff(0, 1), v("0", "1", "0"));
    assert_eq!(*mono.coeff(1, 1), v("0", "0", "1"));
}

#[test]
fn monomial_round_trip_on_third_example() {
    let s1 = example3_s1();
    assert_eq!(s1.to_monomial().to_net(), s1);
}

#[test]
fn top_difference_is_leading_coefficient() {
    for net in [example1_s1(), example3_s1(), example4_s1(), example5_s1()] {
        let (n, m) = net.degree();
        let fd = finite_differences(&net);
        let mono = net.to_monomial();
        assert_eq!(fd.rho, *mono.coeff(n, m));
        assert_eq!(fd.rho10, mono.coeff(n - 1, m).scale(&rat(1, n as i64)));
        assert_eq!(fd.rho01, mono.coeff(n, m - 1).scale(&rat(1, m as i64)));
    }
}

#[test]
fn differences_of_small_nets() {
    let net = bilinear_unit_net();
    let fd = finite_differences(&net);
    let p = |i, j| net.point(i, j).clone();
    assert_eq!(fd.rho, p(0, 0) - p(0, 1) - p(1, 0) + p(1, 1));
    let flat = ControlNet::from_fn(2, 3, |_, _| v("1", "-2", "5")).unwrap();
    let fd = finite_differences(&flat);
    assert!(fd.rho.is_zero() && fd.rho10.is_zero() && fd.rho01.is_zero());
    let b = boundary_differences(&ControlNet::from_fn(3, 3, |_, _| v("1", "-2", "5")).unwrap()).unwrap();
    assert!(b.delta.iter().chain(b.delta1.iter()).all(|d| d.is_zero()));
}

#[test]
fn boundary_differences_need_square_net() {
    assert!(matches!(boundary_differences(&example1_s1()), Err(Error::DegreeMismatch(_))));
}

#[test]
fn boundary_ratio_of_third_example() {
    let (s1, s2) = (example3_s1(), example3_s2());
    let rho = finite_differences(&s1).rho;
    let b = boundary_differences(&s2).unwrap();
    // recovered map A(1/2,0), B(0,1/2): x = -1/2, y = 1/2, kappa = x^2 y^3
    let k = collinear(&rho, &b.delta[0]).unwrap().unwrap();
    assert_eq!(k, r("1/32"));
    // the listed vertices A(0,1/2), B(1/2,0) give x^2 y^3 = -1/32, which is
    // the ratio of the net with its first index reversed
    let flipped = NetSymmetry { flip_u: true, flip_v: false, transpose: false }.apply(&s2);
    let b = boundary_differences(&flipped).unwrap();
    assert_eq!(collinear(&rho, &b.delta[0]).unwrap(), Some(r("-1/32")));
}

#[test]
fn boundary_differences_of_identity_composition() {
    let base = bilinear_unit_net();
    let id = BilinearReparam::new(p2("0", "0"), p2("1", "0"), p2("1", "1"), p2("0", "1"));
    let composed = tpbc::blossom::reparam_bilinear(&base, &id);
    assert_eq!(composed.degree(), (2, 2));
    let b = boundary_differences(&composed).unwrap();
    // power-basis oracle: delta is the top coefficient of the boundary curve
    // (zero after elevation), delta1 the next one
    let curves = [base.u_curve(0), base.v_curve(0), base.u_curve(1), base.v_curve(1)];
    for (k, c) in curves.iter().enumerate() {
        let pw = c.to_power();
        assert!(b.delta[k].is_zero());
        assert_eq!(b.delta1[k], pw[1]);
    }
}

#[test]
fn subdivide_examples() {
    let s1 = example1_s1();
    let (zero, one) = (rat(0, 1), rat(1, 1));
    assert_eq!(s1.subdivide(&zero, &one, &zero, &one).unwrap(), s1);
    // the example tables put their first parameter along the library's v axis
    assert_eq!(s1.subdivide(&r("1/6"), &r("3/4"), &r("0"), &r("1/2")).unwrap(), example1_s2());
    assert!(matches!(s1.subdivide(&r("1/3"), &r("1/3"), &zero, &one), Err(Error::DegenerateWindow(_))));
}

#[test]
fn subdivide_matches_composed_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let net = random_net(&mut rng, 3, 2);
    let (a, b, c, d) = (r("1/4"), r("3/4"), r("1/3"), r("2/3"));
    let sub = net.subdivide(&a, &b, &c, &d).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            let (s, t) = (rat(i, 4), rat(j, 4));
            let u = (rat(1, 1) - &s) * &a + &s * &b;
            let w = (rat(1, 1) - &t) * &c + &t * &d;
            assert_eq!(sub.evaluate(&s, &t), net.evaluate(&u, &w));
        }
    }
}

#[test]
fn elevation_examples() {
    let net = bilinear_unit_net();
    let e = net.elevate_u();
    assert_eq!(e.degree(), (2, 1));
    for j in 0..=1 {
        assert_eq!(*e.point(1, j), (net.point(0, j).clone() + net.point(1, j).clone()).scale(&rat(1, 2)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let net = random_net(&mut rng, 2, 3);
    let (eu, ev) = (net.elevate_u(), net.elevate_v());
    for i in 0..3 {
        for j in 0..3 {
            let (s, t) = (rat(i, 2), rat(j - 1, 3));
            assert_eq!(eu.evaluate(&s, &t), net.evaluate(&s, &t));
            assert_eq!(ev.evaluate(&s, &t), net.evaluate(&s, &t));
        }
    }
    // u^(n+1) v^m coefficient of an elevated net vanishes
    assert!(finite_differences(&eu).rho.is_zero());
}

#[test]
fn collinear_and_coplanar() {
    assert_eq!(collinear(&v("1", "2", "3"), &v("2", "4", "6")).unwrap(), Some(rat(2, 1)));
    assert_eq!(collinear(&v("1", "2", "3"), &v("2", "4", "7")).unwrap(), None);
    assert!(matches!(collinear(&Vec3::zero(), &v("1", "0", "0")), Err(Error::ZeroVector)));
    assert!(coplanar(&[v("1", "0", "0"), v("0", "1", "0"), v("1", "1", "0")]));
    assert!(!coplanar(&[v("1", "0", "0"), v("0", "1", "0"), v("0", "0", "1")]));
}

#[test]
fn first_example_scale_ratio() {
    let (f1, f2) = (finite_differences(&example1_s1()), finite_differences(&example1_s2()));
    let k = collinear(&f1.rho, &f2.rho).unwrap().unwrap();
    // library window (1/6, 3/4, 0, 1/2) on a (4,2) net: (7/12)^4 (1/2)^2
    let want = tpbc::scalar::pow(&r("7/12"), 4) * tpbc::scalar::pow(&r("1/2"), 2);
    assert_eq!(k, want);
    // the literal product (1/2)^4 (7/12)^2 belongs to the transposed reading
    assert_ne!(k, tpbc::scalar::pow(&r("1/2"), 4) * tpbc::scalar::pow(&r("7/12"), 2));
}

#[test]
fn second_example_coplanarity() {
    let (f1, f3) = (finite_differences(&example1_s1()), finite_differences(&example2_s3()));
    assert!(coplanar(&[f1.rho.clone(), f3.rho.clone(), f1.rho10.clone(), f3.rho10.clone()]));
    assert!(coplanar(&[f1.rho.clone(), f3.rho.clone(), f1.rho01.clone(), f3.rho01.clone()]));
}

#[test]
fn symmetry_matching() {
    let s1 = example1_s1();
    assert_eq!(nets_equal_up_to_symmetry(&s1, &s1), Some(NetSymmetry::IDENTITY));
    let fu = NetSymmetry { flip_u: true, flip_v: false, transpose: false };
    assert_eq!(nets_equal_up_to_symmetry(&s1, &fu.apply(&s1)), Some(fu));
    let sub = s1.subdivide(&r("1/6"), &r("3/4"), &r("0"), &r("1/2")).unwrap();
    assert_eq!(nets_equal_up_to_symmetry(&sub, &example1_s2()), Some(NetSymmetry::IDENTITY));
}

#[test]
fn symmetry_names_round_trip() {
    for s in NetSymmetry::all() {
        assert_eq!(NetSymmetry::from_name(s.name()), Some(s));
    }
    assert_eq!(NetSymmetry::for_degree(2, 3).len(), 4);
    assert_eq!(NetSymmetry::for_degree(3, 3).len(), 8);
}

#[test]
fn generic_over_floats() {
    let f: tpbc::F64Net = example1_s1().map(|x| num_traits::ToPrimitive::to_f64(x).unwrap());
    let p = f.evaluate(&1.0, &1.0);
    assert_eq!((p.x, p.y, p.z), (4.0, 3.0, 0.75));
    let g: tpbc::F32Net = ControlNet::from_fn(1, 1, |i, j| Vec3::new(i as f32, j as f32, (i * j) as f32)).unwrap();
    assert_eq!(g.evaluate(&0.5, &0.5).z, 0.25);
}

#[test]
fn curve_power_basis() {
    let c = BezierCurve3::new(vec![v("0", "0", "0"), v("1", "2", "0"), v("3", "3", "3")]).unwrap();
    let pw = c.to_power();
    let t = r("2/5");
    let direct = pw[0].clone() + pw[1].scale(&t) + pw[2].scale(&(&t * &t));
    assert_eq!(c.evaluate(&t), direct);
}

fn arb_net(max: usize) -> impl Strategy<Value = RatNet> {
    (1..=max, 1..=max, any::<u64>()).prop_map(|(n, m, seed)| random_net(&mut ChaCha8Rng::seed_from_u64(seed), n, m))
}

fn arb_window() -> impl Strategy<Value = [Rat; 4]> {
    let end = (-6i64..=12, 1i64..=6).prop_map(|(k, d)| rat(k, d));
    (end.clone(), end.clone(), end.clone(), end).prop_filter("nondegenerate", |(a, b, c, d)| a != b && c != d).prop_map(|(a, b, c, d)| [a, b, c, d])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identity_window_is_identity(net in arb_net(4)) {
        let (z, o) = (rat(0, 1), rat(1, 1));
        prop_assert_eq!(net.subdivide(&z, &o, &z, &o).unwrap(), net);
    }

    #[test]
    fn nested_windows_compose(net in arb_net(3), w1 in arb_window(), w2 in arb_window()) {
        let [a, b, c, d] = w1.clone();
        let [e, f, g, h] = w2;
        let once = net.subdivide(&a, &b, &c, &d).unwrap().subdivide(&e, &f, &g, &h).unwrap();
        let lerp = |x: &Rat, y: &Rat, t: &Rat| (rat(1, 1) - t) * x + t * y;
        let composed = net
            .subdivide(&lerp(&a, &b, &e), &lerp(&a, &b, &f), &lerp(&c, &d, &g), &lerp(&c, &d, &h))
            .unwrap();
        prop_assert_eq!(once, composed);
    }

    #[test]
    fn rho_is_leading_coefficient(net in arb_net(4)) {
        let (n, m) = net.degree();
        prop_assert_eq!(finite_differences(&net).rho, net.to_monomial().coeff(n, m).clone());
    }

    #[test]
    fn monomial_round_trip(net in arb_net(4)) {
        let mono = net.to_monomial();
        let (n, m) = mono.degree();
        let coeffs = (0..=n).flat_map(|i| (0..=m).map(move |j| (i, j))).map(|(i, j)| mono.coeff(i, j).clone()).collect();
        prop_assert_eq!(MonomialForm::new(n, m, coeffs).unwrap().to_net(), net);
    }

    #[test]
    fn elevated_top_difference_vanishes(net in arb_net(3)) {
        prop_assert!(finite_differences(&net.elevate_u()).rho.is_zero());
        prop_assert!(finite_differences(&net.elevate_v()).rho.is_zero());
    }

    #[test]
    fn symmetry_match_is_reflexive_and_invertible(net in arb_net(3), k in 0usize..8) {
        let s = NetSymmetry::all()[k];
        let img = s.apply(&net);
        let found = nets_equal_up_to_symmetry(&net, &img).unwrap();
        prop_assert_eq!(found.apply(&net), img.clone());
        let back = nets_equal_up_to_symmetry(&img, &net).unwrap();
        prop_assert_eq!(back.apply(&img), net.clone());
        prop_assert_eq!(nets_equal_up_to_symmetry(&net, &net), Some(NetSymmetry::IDENTITY));
    }
}
