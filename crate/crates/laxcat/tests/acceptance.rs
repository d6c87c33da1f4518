//! The ten acceptance criteria, each timed against its limit, one line per
//! criterion. Runs without the test harness so the lines always print.

use std::time::{Duration, Instant};

use laxcat::classifier::{
    check_generalized_dist_law, classifier, classifier_mnd_iso_check, coassociativity_check, compose_via, comultiplication, counit_check,
    dist_tensor_iso_check, fincat_lax_pool, gdl_from_dist_law, identity_gdl, transpose_roundtrip, Classifier,
};
use laxcat::distlaw::examples::{identity_law, maybe_powerset_law};
use laxcat::distlaw::lift::iterated_em_check;
use laxcat::distlaw::{beck_branches, beck_equivalence_check, beck_mutation_suite, compose_monads, maybe_powerset_mutations};
use laxcat::fincat::{default_probes, em_universal_property_check, CatMonad, FinCat, FinSet};
use laxcat::gray::{gray_adjunction_check, gray_tensor};
use laxcat::lax::check_lax_functor;
use laxcat::monads::examples::fincat_corpus;
use laxcat::monads::mnd_delta_a_iso_check;
use laxcat::presentation::DEFAULT_BUDGET;
use laxcat::{Presentation, Presented, Report, TwoCategory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn report(r: Report) -> Outcome {
    if r.passed() && !r.any_unknown() {
        Ok(())
    } else {
        Err(r.render_text())
    }
}

fn host<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn one() -> Classifier {
    classifier(&Presentation::terminal()).expect("terminal classifier")
}

fn arrow() -> Classifier {
    classifier(&Presentation::walking_arrow()).expect("arrow classifier")
}

fn mnd_is_delta_a() -> Outcome {
    report(mnd_delta_a_iso_check(8))
}

fn classifier_of_one_is_mnd() -> Outcome {
    report(host(classifier_mnd_iso_check(4))?)
}

fn dist_is_tensor_square() -> Outcome {
    report(host(dist_tensor_iso_check(4))?)
}

fn beck_equivalence() -> Outcome {
    let h = FinSet { bound: 2 };
    let law = maybe_powerset_law();
    let (_, v) = host(beck_branches(&h, &law))?;
    if !(v.axioms && v.lax && v.colax && v.composite) {
        return Err(format!("branch verdicts {v:?}"));
    }
    report(host(beck_equivalence_check(&h, &law))?)?;
    let n = maybe_powerset_mutations().len();
    if n < 20 {
        return Err(format!("only {n} mutations"));
    }
    report(host(beck_mutation_suite(&h))?)
}

fn iterated_em() -> Outcome {
    report(host(iterated_em_check(&FinSet { bound: 2 }, &maybe_powerset_law(), 2))?)
}

fn em_universal_property() -> Outcome {
    let probes = default_probes();
    for m in fincat_corpus().into_iter().filter(|m| m.object.objects.len() <= 3) {
        report(em_universal_property_check(&CatMonad::new(m), &probes))?;
    }
    Ok(())
}

fn gray_adjunction() -> Outcome {
    let two = Presentation::walking_arrow();
    let t = host(gray_tensor(&two, &two))?;
    report(host(gray_adjunction_check(&t, 4))?)
}

fn classifier_transposition() -> Outcome {
    let (one, arrow) = (one(), arrow());
    let (ones, twos) = fincat_lax_pool(&arrow);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7);
    for _ in 0..50 {
        let i = rng.gen_range(0..ones.len() + twos.len());
        let r = match ones.get(i) {
            Some(f) => transpose_roundtrip(&one, &FinCat, f),
            None => transpose_roundtrip(&arrow, &FinCat, &twos[i - ones.len()]),
        };
        report(host(r)?)?;
    }
    Ok(())
}

fn comonoid_laws() -> Outcome {
    for cl in [one(), arrow()] {
        let m = host(comultiplication(&cl))?;
        report(host(counit_check(&cl, &m))?)?;
        report(host(coassociativity_check(&cl, &m))?)?;
    }
    Ok(())
}

fn composition_via_gamma() -> Outcome {
    let (cl, h) = (one(), FinSet::default());
    for d in [maybe_powerset_law(), identity_law()] {
        let hf = host(compose_via(&cl, &h, &gdl_from_dist_law(&d)))?;
        let m = host(compose_monads(&h, &d))?;
        let same = hf.ones[0].1 == m.t && h.compare(&hf.unit[0], &m.eta).is_equal() && h.compare(&hf.comp[&(0, 0)], &m.mu).is_equal();
        if !same {
            return Err(format!("{}: composite differs", m.name));
        }
        report(host(check_lax_functor(&cl.base_host(), &h, &hf))?)?;
    }
    let t = host(gray_tensor(&cl.result, &cl.result))?;
    let g = identity_gdl(&cl, &cl, &t);
    report(host(check_generalized_dist_law(&cl, &cl, &t.host(), &g))?)?;
    let hf = host(compose_via(&cl, &t.host(), &g))?;
    let by_rewriting = Presented::rewriting(&t.result, DEFAULT_BUDGET);
    report(host(check_lax_functor(&cl.base_host(), &by_rewriting, &hf))?)
}

struct Criterion {
    desc: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() {
    let criteria = [
        Criterion { desc: "Mnd against the augmented simplex category, n + m <= 8", limit: secs(10), run: mnd_is_delta_a },
        Criterion { desc: "classifier of 1 against Mnd, sequences up to 4", limit: secs(5), run: classifier_of_one_is_mnd },
        Criterion { desc: "Dist against the tensor square of the classifier of 1", limit: secs(5), run: dist_is_tensor_square },
        Criterion { desc: "Beck equivalence and mutations for maybe over powerset", limit: secs(30), run: beck_equivalence },
        Criterion { desc: "iterated algebras against composite algebras", limit: secs(60), run: iterated_em },
        Criterion { desc: "EM universal property on the corpus", limit: secs(60), run: em_universal_property },
        Criterion { desc: "Gray adjunction for 2 (x) 2 at word length 4", limit: secs(10), run: gray_adjunction },
        Criterion { desc: "50 seeded lax functors round-trip through transposition", limit: secs(30), run: classifier_transposition },
        Criterion { desc: "comonoid laws on the classifiers of 1 and 2", limit: secs(30), run: comonoid_laws },
        Criterion { desc: "composition via a generalized distributive law", limit: secs(30), run: composition_via_gamma },
    ];
    let mut failed = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= c.limit {
                Ok(())
            } else {
                Err(format!("took {} ms, limit {} ms", elapsed.as_millis(), c.limit.as_millis()))
            }
        });
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {status} ({} ms) {}", elapsed.as_millis(), c.desc);
        if let Err(why) = outcome {
            println!("{why}");
            failed.push(n);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
