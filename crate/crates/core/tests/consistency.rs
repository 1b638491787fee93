use indexlab::gnib::{gnib_at, gnib_check, Overall, PairReport, Status};
use indexlab::orbits::enumerate_orbit_reps;
use indexlab::liealg::{IndexConfig, Mode};
use indexlab::pairs::Family;

const SMALL: [Family; 6] = [
    Family::GlSo { n: 4 },
    Family::GlSp { n: 2 },
    Family::SpGl { n: 2 },
    Family::SoGl { n: 2 },
    Family::GlGl { p: 2, q: 2 },
    Family::SoSo { p: 2, q: 3 },
];

#[test]
fn sampled_and_symbolic_agree_on_small_pairs() {
    for fam in SMALL {
        let sym = gnib_check(fam, &IndexConfig::with_mode(Mode::Symbolic, 0)).unwrap();
        assert!(sym.orbits.iter().all(|v| v.report.is_exact()), "{fam}");
        for seed in [1, 99] {
            let mc = gnib_check(fam, &IndexConfig::with_mode(Mode::MonteCarlo, seed)).unwrap();
            assert_eq!(mc.orbits.len(), sym.orbits.len());
            for (a, b) in mc.orbits.iter().zip(&sym.orbits) {
                assert_eq!(a.orbit, b.orbit);
                assert!(a.index >= b.index, "{fam} {}", a.orbit);
                if a.status != Status::Inconclusive {
                    assert_eq!(a.status, b.status, "{fam} {}", a.orbit);
                }
            }
        }
    }
}

#[test]
fn symbolic_results_ignore_the_seed() {
    let key = |r: &PairReport| r.orbits.iter().map(|v| (v.orbit.clone(), v.index, v.lower_bound, v.status)).collect::<Vec<_>>();
    for fam in SMALL {
        let a = gnib_check(fam, &IndexConfig::with_mode(Mode::Symbolic, 1)).unwrap();
        let b = gnib_check(fam, &IndexConfig::with_mode(Mode::Symbolic, 12345)).unwrap();
        assert_eq!(key(&a), key(&b), "{fam}");
    }
    let reps = enumerate_orbit_reps(Family::GlGl { p: 3, q: 4 }).unwrap();
    let bad = reps.iter().find(|r| r.id == "{bab,bab,a}").unwrap();
    let a = gnib_at(bad, &IndexConfig::with_mode(Mode::Symbolic, 1)).unwrap();
    let b = gnib_at(bad, &IndexConfig::with_mode(Mode::Symbolic, 777)).unwrap();
    assert_eq!((a.index, a.lower_bound, a.status), (b.index, b.lower_bound, b.status));
    assert_eq!(a.status, Status::UnequalCertified);
}

#[test]
fn auto_mode_certifies_everything_it_reports() {
    for fam in SMALL.into_iter().chain([Family::GlGl { p: 3, q: 4 }]) {
        let r = gnib_check(fam, &IndexConfig::with_mode(Mode::Auto, 3)).unwrap();
        assert_ne!(r.overall, Overall::Inconclusive, "{fam}");
        for v in &r.orbits {
            assert!(v.lower_bound >= v.rank && v.lower_bound <= v.index);
        }
    }
}
