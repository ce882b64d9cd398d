use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yangian::central::{certify_central, qdet};
use yangian::gauss::Drinfeld;
use yangian::serieslab::{is_optimal, power_sum_eval, residues};
use yangian::{generator_series, loop_degree, orbit_size_mod_p, CurrentAlgebra, Element, Gen, Prime, Ring, Series, Yangian};

fn random_element(y: &Yangian, rng: &mut ChaCha8Rng) -> Element {
    let mut x = y.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let g = Gen::new(rng.gen_range(1..=y.n()), rng.gen_range(1..=y.n()), rng.gen_range(1..=3));
        let c = y.p().elem(rng.gen_range(1..y.p().get() as i64));
        x = y.add(&x, &y.scale(&y.gen(g).unwrap(), c));
    }
    x
}

#[test]
fn orbit_size_vanishes() {
    let p = Prime::new(3).unwrap();
    assert!(orbit_size_mod_p(&[1, 0, 0], p).is_zero());
    assert_eq!(orbit_size_mod_p(&[1, 0], p), p.elem(2));
}

#[test]
fn swap_and_multiply() {
    let y = Yangian::new(2, 5).unwrap();
    let t = |i, j| y.t(i, j, 1).unwrap();
    assert_eq!(y.swap_rule(Gen::new(1, 1, 1), Gen::new(1, 2, 1)).unwrap(), t(1, 2));
    let d = y.sub(&t(1, 1), &t(2, 2));
    assert_eq!(y.swap_rule(Gen::new(1, 2, 1), Gen::new(2, 1, 1)).unwrap(), d);
    assert_eq!(y.commutator(&t(1, 2), &t(2, 1)).unwrap(), d);
    let want = y.sub(&y.mul(&t(1, 1), &t(1, 2)), &t(1, 2));
    assert_eq!(y.multiply(&t(1, 2), &t(1, 1)).unwrap(), want);
    assert_eq!(y.mul(&t(1, 1), &t(1, 2)).num_terms(), 1);
}

#[test]
fn adjoint_power_is_commutator_with_pth_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2, 3] {
        let y = Yangian::new(2, p).unwrap();
        for _ in 0..10 {
            let (a, b) = (random_element(&y, &mut rng), random_element(&y, &mut rng));
            let mut ad = b.clone();
            for _ in 0..p {
                ad = y.commutator(&a, &ad).unwrap();
            }
            assert_eq!(ad, y.commutator(&y.pth_power(&a).unwrap(), &b).unwrap());
        }
    }
}

#[test]
fn automorphisms() {
    let y = Yangian::new(2, 3).unwrap();
    let p = y.p();
    let f = [p.one(), p.one()];
    assert_eq!(y.apply_mul_series(&y.t(1, 2, 1).unwrap(), &f).unwrap(), y.t(1, 2, 1).unwrap());
    assert_eq!(y.apply_mul_series(&y.t(1, 1, 1).unwrap(), &f).unwrap(), y.add(&y.t(1, 1, 1).unwrap(), &y.one()));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let x = random_element(&y, &mut rng);
        let z = random_element(&y, &mut rng);
        let (c, d) = (p.elem(rng.gen_range(0..3)), p.elem(rng.gen_range(0..3)));
        let twice = y.apply_translation(&y.apply_translation(&x, c).unwrap(), d).unwrap();
        assert_eq!(twice, y.apply_translation(&x, c + d).unwrap());
        let tau = |e: &Element| y.apply_transpose(e).unwrap();
        assert_eq!(tau(&y.mul(&x, &z)), y.mul(&tau(&z), &tau(&x)));
    }
}

#[test]
fn series_properties() {
    let y = Yangian::new(2, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let random_series = |rng: &mut ChaCha8Rng| {
        let mut coeffs = vec![y.one()];
        coeffs.extend((0..3).map(|_| random_element(&y, rng)));
        Series::new(&y, coeffs).unwrap()
    };
    for _ in 0..5 {
        let (f, g, h) = (random_series(&mut rng), random_series(&mut rng), random_series(&mut rng));
        assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        assert_eq!(f.mul(&f.invert().unwrap()).unwrap(), Series::one(&y, 3));
        let (c, d) = (y.p().elem(1), y.p().elem(2));
        assert_eq!(f.shift_arg(c).shift_arg(d), f.shift_arg(c + d));
    }
}

#[test]
fn gauss_and_qdet_low_orders() {
    for p in [2, 3] {
        let y = Yangian::new(3, p).unwrap();
        let dr = Drinfeld::new(&y, 2).unwrap();
        for i in 1..=3 {
            assert_eq!(dr.d(i, 1).unwrap(), y.t(i, i, 1).unwrap());
        }
        let trace = (1..=3).fold(y.zero(), |a, i| y.add(&a, &y.t(i, i, 1).unwrap()));
        assert_eq!(*qdet(&y, 2).unwrap().coefficient(1).unwrap(), trace);
    }
    let y1 = Yangian::new(1, 2).unwrap();
    assert_eq!(qdet(&y1, 3).unwrap(), generator_series(&y1, 1, 1, 3).unwrap());
}

#[test]
fn certificate_witness() {
    let y = Yangian::new(2, 2).unwrap();
    let cert = certify_central(&y.t(1, 2, 1).unwrap(), 4).unwrap();
    let w = cert.failures.iter().find(|(g, _)| *g == Gen::new(2, 1, 1)).map(|(_, w)| w.clone());
    assert_eq!(w, Some(y.sub(&y.t(1, 1, 1).unwrap(), &y.t(2, 2, 1).unwrap())));
}

#[test]
fn current_algebra() {
    let g = CurrentAlgebra::new(2, 3).unwrap();
    assert_eq!(g.commutator(&g.e(1, 1, 0).unwrap(), &g.e(1, 2, 0).unwrap()).unwrap(), g.e(1, 2, 0).unwrap());
    let y = Yangian::new(2, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let (a, b) = (random_element(&y, &mut rng), random_element(&y, &mut rng));
        let prod = y.mul(&a, &b);
        if !prod.is_zero() {
            assert!(loop_degree(&prod).unwrap() <= loop_degree(&a).unwrap() + loop_degree(&b).unwrap());
        }
    }
}

#[test]
fn symmetric_function_values() {
    for p in [3, 5, 7] {
        let pts = residues(Prime::new(p).unwrap());
        assert_eq!(power_sum_eval(p as u32 - 1, &pts).unwrap(), Prime::new(p).unwrap().elem(-1));
    }
    assert!(is_optimal(2, |r| r.saturating_sub(1) as u64, 2));
}
