use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use su3_exact::rat;
use su3_witten::*;

// Closed forms rebuilt from MPFR gamma and zeta as an independent check.
#[test]
fn closed_residues_against_mpfr() {
    let p = 256;
    let opts = ResidueOptions { k_max: 2, ..Default::default() };
    let reps = residues(&opts).unwrap();
    let tol = Float::with_val(p, 10).pow(-20);
    let pi = Float::with_val(p, Constant::Pi);
    let g13 = Float::with_val(p, 1) / 3u32;
    let g13 = g13.gamma();
    let find = |f: PoleFunction, loc| reps.iter().find(|r| r.function == f && r.location == loc).unwrap();

    let w23 = Float::with_val(p, g13.clone().pow(3u32)) / (Float::with_val(p, &pi * 2u32) * Float::with_val(p, 3).sqrt());
    let r = find(PoleFunction::Omega, rat(2, 3));
    assert!(Float::with_val(p, &r.residue_closed.value - &w23).abs() < Float::with_val(p, 2).pow(-240));
    assert!(r.residue_closed.value.to_string_radix(10, Some(11)).starts_with("1.7666387503"));

    let r0 = find(PoleFunction::GammaOmega, rat(0, 1));
    assert!((Float::with_val(p, &r0.residue_closed.value * 3u32) - 1u32).abs() < Float::with_val(p, 2).pow(-240));

    let sqrt_pi = Float::with_val(p, pi.sqrt_ref());
    let z_half = Float::with_val(p, 0.5).zeta();
    let r12 = find(PoleFunction::GammaOmega, rat(1, 2));
    let want = Float::with_val(p, &sqrt_pi * &z_half);
    assert!(Float::with_val(p, &r12.residue_closed.value - &want).abs() < Float::with_val(p, 2).pow(-240));

    for loc in [rat(2, 3), rat(1, 2), rat(-1, 2), rat(-3, 2)] {
        let r = find(PoleFunction::Omega, loc.clone());
        assert!(r.abs_diff < tol, "ω residue at {loc}: {}", r.abs_diff);
        let g = find(PoleFunction::GammaOmega, loc.clone());
        assert!(g.abs_diff < tol, "Γω residue at {loc}: {}", g.abs_diff);
        assert!(r.residue_numeric.value.imag().clone().abs() < tol);
    }
    assert!(r0.abs_diff < tol);
    // ω has no pole at 0, so only Γω is reported there
    assert!(reps.iter().all(|r| !(r.function == PoleFunction::Omega && r.location == rat(0, 1))));
}

#[test]
fn circle_residue_of_a_known_function() {
    // 1/sin(πs) at 0 has residue 1/π
    let opts = ResidueOptions::default();
    let wp = opts.sample_prec;
    let mut f = |s: &rug::Complex| -> Result<rug::Complex, WittenError> {
        let pi = Float::with_val(wp, Constant::Pi);
        Ok(rug::Complex::with_val(wp, s * &pi).sin().recip())
    };
    let r = numeric_residue(&mut f, &rat(0, 1), &opts).unwrap();
    let want = Float::with_val(wp, Constant::Pi).recip();
    assert!(Float::with_val(wp, r.value.real() - &want).abs() < 1e-25);
}
