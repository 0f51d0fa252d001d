//! Exit criteria, one line per criterion. Runs as a plain binary
//! (`harness = false`) so the report is always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use simcore::betaset::{is_simultaneous_core, is_t_core_hooks};
use simcore::counting::{
    anderson, catalan, f, motzkin, oracle_avg_size_consecutive, oracle_max_size,
    oracle_self_conjugate,
};
use simcore::enumeration::enumerate_cores;
use simcore::finiteness::{analyze, witness};
use simcore::powerseries::{check_functional_equation, closed_form_series, series_from_recurrence};
use simcore::{BetaSet, CorePoset, CoreSpec, Count, ExactCountTable, Partition, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const COPRIME_PAIRS: [(usize, usize); 7] = [(2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (4, 7), (5, 6)];

fn spec(m: &[usize]) -> CoreSpec {
    CoreSpec::new(m.to_vec()).unwrap()
}

/// `(t, ..., t + p)`; for `t = 0` the zero modulus imposes nothing and is dropped.
fn consecutive(t: usize, p: usize) -> CoreSpec {
    CoreSpec::new((t.max(1)..=t + p).collect()).unwrap()
}

fn count_of(s: &CoreSpec) -> Count {
    Count::from(enumerate_cores(s).unwrap().len())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan_law() -> Outcome {
    for t in 0..=12usize {
        let rec = f(t as isize, 1);
        ensure(rec == catalan(t), || format!("f({t},1) = {rec} != catalan"))?;
        ensure(Ok(rec.clone()) == anderson(t, t + 1), || format!("anderson mismatch at t={t}"))?;
    }
    let start = Instant::now();
    for t in 0..=8usize {
        let n = count_of(&consecutive(t, 1));
        ensure(n == f(t as isize, 1), || format!("enumeration of ({t},{}) gives {n}", t + 1))?;
    }
    let elapsed = start.elapsed();
    ensure(count_of(&spec(&[8, 9])) == Count::from(1430u32), || "C_8 != 1430".into())?;
    ensure(elapsed < Duration::from_secs(5), || format!("enumeration took {elapsed:?}"))?;
    Ok(format!("t<=12 exact, enumeration t<=8 in {elapsed:.2?}"))
}

fn motzkin_law() -> Outcome {
    for t in 0..=12usize {
        ensure(f(t as isize, 2) == motzkin(t), || format!("f({t},2) != motzkin"))?;
    }
    for t in 0..=10usize {
        let n = count_of(&consecutive(t, 2));
        ensure(n == f(t as isize, 2), || format!("enumeration at t={t} gives {n}"))?;
    }
    ensure(count_of(&spec(&[10, 11, 12])) == Count::from(2188u32), || "M_10 != 2188".into())?;
    let expected: Vec<Count> = [1u32, 1, 2, 4, 9, 21, 51, 127, 323, 835]
        .iter()
        .map(|&x| Count::from(x))
        .collect();
    let prefix: Vec<Count> = (0..10).map(|t| f(t, 2)).collect();
    ensure(prefix == expected, || format!("prefix {prefix:?}"))?;
    Ok("t<=12 exact, enumeration t<=10, prefix matches".into())
}

fn generating_functions() -> Outcome {
    for p in 1..=4 {
        let closed = closed_form_series::<Rational>(p, 30).map_err(|e| e.to_string())?;
        let rec = series_from_recurrence::<Rational>(p, 30);
        ensure(closed == rec, || format!("closed form differs from recurrence at p={p}"))?;
        ensure(check_functional_equation(&rec, p), || format!("functional equation fails at p={p}"))?;
        let counts = closed.to_counts().map_err(|e| e.to_string())?;
        ensure(counts.len() == 31, || "wrong length".into())?;
    }
    Ok("p in 1..=4 through order 30".into())
}

fn anderson_oracle() -> Outcome {
    for (a, b) in COPRIME_PAIRS {
        let n = count_of(&spec(&[a, b]));
        let expected = anderson(a, b).unwrap();
        ensure(n == expected, || format!("({a},{b}): {n} vs {expected}"))?;
    }
    ensure(count_of(&spec(&[3, 7])) == Count::from(12u32), || "(3,7) != 12".into())?;
    Ok("7 coprime pairs".into())
}

fn olsson_stanton_oracle() -> Outcome {
    for (a, b) in COPRIME_PAIRS {
        let stats = enumerate_cores(&spec(&[a, b])).unwrap().stats();
        let expected = oracle_max_size(a, b).unwrap();
        ensure(Count::from(stats.max_size) == expected, || {
            format!("({a},{b}): max {} vs {expected}", stats.max_size)
        })?;
    }
    let max45 = enumerate_cores(&spec(&[4, 5])).unwrap().stats().max_size;
    ensure(max45 == 15, || format!("(4,5) max {max45}"))?;
    Ok("7 coprime pairs".into())
}

fn stanley_zanello_oracle() -> Outcome {
    for t in 1..=7usize {
        let avg = enumerate_cores(&consecutive(t, 1)).unwrap().stats().average_size().unwrap();
        let expected = oracle_avg_size_consecutive(t);
        ensure(avg == expected, || format!("t={t}: {avg} vs {expected}"))?;
    }
    let avg3 = enumerate_cores(&spec(&[3, 4])).unwrap().stats().average_size().unwrap();
    ensure(avg3 == Rational::from_integer(2.into()), || format!("t=3 average {avg3}"))?;
    Ok("t in 1..=7 exact".into())
}

fn ford_mai_sze_oracle() -> Outcome {
    for (a, b) in COPRIME_PAIRS {
        let stats = enumerate_cores(&spec(&[a, b])).unwrap().stats();
        let expected = oracle_self_conjugate(a, b).unwrap();
        ensure(Count::from(stats.self_conjugate_count) == expected, || {
            format!("({a},{b}): {} vs {expected}", stats.self_conjugate_count)
        })?;
    }
    Ok("7 coprime pairs".into())
}

fn finiteness_both_directions() -> Outcome {
    for m in [&[4usize, 6][..], &[6, 9], &[10, 15]] {
        let s = spec(m);
        ensure(!analyze(&s).finite, || format!("{s} reported finite"))?;
        let mut last = None;
        for n in 0..=20 {
            let w = witness(&s, n).map_err(|e| e.to_string())?;
            ensure(is_simultaneous_core(&w, &s), || format!("{s} witness {n} not a core"))?;
            ensure(w.beta_set().is_simultaneous_core(&s), || format!("{s} witness {n} beta"))?;
            ensure(last.is_none_or(|prev| prev < w.size()), || format!("{s} sizes not increasing"))?;
            last = Some(w.size());
        }
    }
    let start = Instant::now();
    let finite: &[&[usize]] = &[&[2, 3], &[3, 4], &[3, 7], &[5, 6], &[4, 5, 6], &[3, 5, 7], &[6, 10, 15]];
    for m in finite {
        let s = spec(m);
        let report = analyze(&s);
        let bound = report.bound.ok_or_else(|| format!("{s} reported infinite"))?;
        for lambda in enumerate_cores(&s).unwrap().members() {
            let top = lambda.beta_set().largest().unwrap_or(0);
            ensure(top < bound, || format!("{s}: {lambda} has beta element {top} >= {bound}"))?;
        }
    }
    ensure(analyze(&spec(&[6, 10, 15])).bound == Some(125), || "(6,10,15) bound".into())?;
    Ok(format!("3 infinite specs, 7 finite specs incl. (6,10,15) fully enumerated in {:.2?}", start.elapsed()))
}

fn r_class_laws() -> Outcome {
    for p in 1..=3usize {
        let mut table = ExactCountTable::new(p);
        for t in 1..=8usize {
            let mut r = vec![Count::zero(); t + 2];
            for lambda in enumerate_cores(&consecutive(t, p)).unwrap().members() {
                let beta = lambda.beta_set();
                let j = (1..).find(|&j| !beta.contains(j)).unwrap();
                ensure(j <= t, || format!("class {j} > t={t}"))?;
                r[j] += Count::one();
            }
            for j in 1..=t {
                let law = if j < p {
                    table.get((t - j) as isize)
                } else {
                    table.get((j - p) as isize) * table.get((t - j) as isize)
                };
                ensure(r[j] == law, || format!("r_{{{t},{j}}} = {} vs {law} (p={p})", r[j]))?;
            }
            let total: Count = r.iter().sum();
            ensure(total == table.get(t as isize), || format!("sum at t={t} p={p}"))?;
        }
    }
    Ok("t<=8, p<=3".into())
}

fn poset_equivalence() -> Outcome {
    for p in 1..=3usize {
        for t in 1..=8usize {
            let poset = CorePoset::new(t, p);
            let from_poset: BTreeSet<Partition> = poset
                .enumerate_good_subsets()
                .into_iter()
                .map(|s| BetaSet::new(s).unwrap().to_partition())
                .collect();
            let family: BTreeSet<Partition> =
                enumerate_cores(&consecutive(t, p)).unwrap().members().iter().cloned().collect();
            ensure(from_poset == family, || format!("families differ at t={t} p={p}"))?;
            let n = poset.count_good_subsets();
            ensure(n == f(t as isize, p), || format!("good subsets {n} at t={t} p={p}"))?;
        }
    }
    Ok("t<=8, p<=3".into())
}

fn hook_beta_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    let mut checked = 0;
    for _ in 0..1000 {
        let len = rng.gen_range(0..=12);
        let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=12)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::from_parts(parts).unwrap();
        let beta = lambda.beta_set();
        for t in 1..=9 {
            ensure(is_t_core_hooks(&lambda, t) == beta.is_t_core(t), || {
                format!("{lambda} t={t}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (partition, t) pairs"))
}

fn linear_combinations_excluded() -> Outcome {
    let mut members = 0;
    for (a, b) in COPRIME_PAIRS {
        let s = spec(&[a, b]);
        for lambda in enumerate_cores(&s).unwrap().members() {
            ensure(lambda.beta_set().excludes_linear_combinations(&s), || {
                format!("{lambda} for {s}")
            })?;
            members += 1;
        }
    }
    Ok(format!("{members} cores"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 Catalan law", catalan_law),
        ("2 Motzkin law", motzkin_law),
        ("3 generating functions", generating_functions),
        ("4 Anderson count", anderson_oracle),
        ("5 Olsson-Stanton max size", olsson_stanton_oracle),
        ("6 Stanley-Zanello average size", stanley_zanello_oracle),
        ("7 Ford-Mai-Sze self-conjugate count", ford_mai_sze_oracle),
        ("8 finiteness both directions", finiteness_both_directions),
        ("9 r-class laws", r_class_laws),
        ("10 poset equivalence", poset_equivalence),
        ("11 hook/beta-set core equivalence", hook_beta_equivalence),
        ("12 linear combinations excluded", linear_combinations_excluded),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
