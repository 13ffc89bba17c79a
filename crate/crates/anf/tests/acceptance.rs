//! Acceptance suite. Runs every criterion and prints one PASS/FAIL line each;
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anf::cli::{self, CommandKind, RunConfig};
use anf::export::{from_json, to_json};
use anf::ingest::{parse_native, parse_treebank_subset, render_native, TreebankConfig};
use anf_core::graph::to_graph;
use anf_core::qa::{linearize, partition};
use anf_core::{AnfTerm, AssociativePair, CoordinationGroup, EncodedSyntagma, ImageIndex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn p(h: usize, d: usize) -> AssociativePair {
    AssociativePair::new(h, d).unwrap()
}

fn pairs(v: &[(usize, usize)]) -> Vec<AssociativePair> {
    v.iter().map(|&(h, d)| p(h, d)).collect()
}

fn idx(v: &[usize]) -> Vec<ImageIndex> {
    v.iter().map(|&i| ImageIndex::new(i).unwrap()).collect()
}

fn example_one() -> EncodedSyntagma {
    parse_native(&data("example1.tsv")).unwrap()
}

fn example_two() -> EncodedSyntagma {
    parse_native(&data("example2.tsv")).unwrap()
}

fn ac1_example_one_anf() -> Check {
    let s = example_one();
    let start = Instant::now();
    let anf = s.to_anf();
    let elapsed = start.elapsed();
    let expected = pairs(&[(3, 1), (3, 2), (2, 3), (5, 4), (3, 5)]);
    ensure!(anf.pairs() == expected.as_slice(), "derivation order {anf}");
    let set: BTreeSet<_> = expected.iter().copied().collect();
    ensure!(
        anf.canonical() == &set,
        "canonical set {:?}",
        anf.canonical()
    );
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("{anf} in {elapsed:?}"))
}

fn ac2_example_one_question() -> Check {
    let s = example_one();
    let part = partition(&s.to_anf(), p(3, 1)).map_err(|e| e.to_string())?;
    ensure!(part.answer.is_empty(), "answer {}", part.answer);
    let question = AnfTerm::from_pairs(pairs(&[(3, 2), (2, 3), (3, 5), (5, 4)]));
    ensure!(part.question == question, "question {}", part.question);
    let line = linearize(&part, "when?").render(&s);
    ensure!(
        line == "when? saw I bird little ? once",
        "rendered {line:?}"
    );
    Ok(line)
}

fn ac3_example_two() -> Check {
    let s = example_two();
    let anf = s.to_anf();
    let listed = "песню\\забытую (+) несет\\песню (+) ветерок\\несет (+) несет\\ветерок (+) \
                  травах\\задумчивых (+) звеня\\травах (+) несет\\звеня";
    ensure!(s.render_term(&anf) == listed, "ANF {}", s.render_term(&anf));
    ensure!(anf.len() == 7, "{} canonical pairs", anf.len());
    let what = linearize(
        &partition(&anf, p(3, 2)).map_err(|e| e.to_string())?,
        "what?",
    );
    ensure!(
        what.tq == idx(&[3, 4, 7, 6, 5]) && what.ta == idx(&[2, 1]),
        "what? {what:?}"
    );
    let how = linearize(
        &partition(&anf, p(3, 7)).map_err(|e| e.to_string())?,
        "how?",
    );
    ensure!(
        how.tq == idx(&[3, 4, 2, 1]) && how.ta == idx(&[7, 6, 5]),
        "how? {how:?}"
    );
    Ok("tq/ta match for 3\\2 and 3\\7".into())
}

fn ac4_trace_replay() -> Check {
    let mut config = RunConfig::new(CommandKind::Normalize);
    config.trace = true;
    let out = cli::run(&config, &data("example1.tsv"));
    ensure!(out.code == 0, "exit {} {}", out.code, out.stderr);
    let lines: Vec<&str> = out
        .stdout
        .lines()
        .filter(|l| l.starts_with("3.1"))
        .collect();
    ensure!(lines.len() == 6, "{} product lines", lines.len());
    let products: Vec<&str> = lines.iter().map(|l| &l[..4]).collect();
    ensure!(
        products == ["3.12", "3.12", "3.12", "3.12", "3.13", "3.14"],
        "products {products:?}"
    );
    // each emission extends the previous pair list by exactly one pair
    let expected = ["x3\\x1", "x3\\x2", "x2\\x3", "x5\\x4", "x3\\x5"];
    for (n, line) in lines[..5].iter().enumerate() {
        let so_far = line.split(" => ").nth(1).unwrap_or_default();
        ensure!(
            so_far == expected[..=n].join(" (+) "),
            "step {}: {line}",
            n + 1
        );
    }
    ensure!(
        lines[5] == format!("3.14: {}", expected.join(" (+) ")),
        "reduction {}",
        lines[5]
    );
    Ok("5 emissions + 1 reduction".into())
}

fn random_term(rng: &mut StdRng) -> AnfTerm {
    let k = rng.gen_range(2..=10);
    let n = rng.gen_range(0..=20);
    (0..n)
        .map(|_| {
            let h = rng.gen_range(1..=k);
            let mut d = rng.gen_range(1..k);
            if d >= h {
                d += 1;
            }
            p(h, d)
        })
        .collect()
}

fn ac5_semigroup_laws() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let start = Instant::now();
    let unit = AnfTerm::empty();
    for n in 0..10_000 {
        let (a, b, c) = (
            random_term(&mut rng),
            random_term(&mut rng),
            random_term(&mut rng),
        );
        ensure!(a.oplus(&b).canonical_eq(&b.oplus(&a)), "commutativity #{n}");
        ensure!(
            a.oplus(&b).oplus(&c).canonical_eq(&a.oplus(&b.oplus(&c))),
            "associativity #{n}"
        );
        ensure!(a.oplus(&a).canonical_eq(&a), "idempotence #{n}");
        ensure!(
            a.reduce().reduce().pairs() == a.reduce().pairs(),
            "reduce idempotence #{n}"
        );
        ensure!(a.oplus(&unit).canonical_eq(&a), "neutral element #{n}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("10000 triples in {elapsed:?}"))
}

fn random_syntagma(rng: &mut StdRng) -> EncodedSyntagma {
    let k = rng.gen_range(2..=10);
    let words: Vec<(String, usize)> = (1..=k)
        .map(|pos| {
            let mut head = rng.gen_range(1..k);
            if head >= pos {
                head += 1;
            }
            (format!("w{pos}"), head)
        })
        .collect();
    let mut groups = Vec::new();
    if k >= 3 && rng.gen_bool(0.2) {
        let (a, b, h) = (
            rng.gen_range(1..=k),
            rng.gen_range(1..=k),
            rng.gen_range(1..=k),
        );
        groups.extend(CoordinationGroup::new([a, b], h).ok());
    }
    EncodedSyntagma::encode(words, groups).unwrap()
}

fn corpus() -> Vec<EncodedSyntagma> {
    let mut rng = StdRng::seed_from_u64(6);
    (0..1000).map(|_| random_syntagma(&mut rng)).collect()
}

fn ac6_partition_soundness(corpus: &[EncodedSyntagma]) -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for (n, s) in corpus.iter().enumerate() {
        let anf = s.to_anf();
        let g = to_graph(&anf, s, &[]).map_err(|e| e.to_string())?;
        for selected in anf.iter() {
            let part = partition(&anf, selected).map_err(|e| e.to_string())?;
            let (q, a) = (part.question.canonical(), part.answer.canonical());
            ensure!(
                q.is_disjoint(a),
                "#{n} {selected}: question and answer overlap"
            );
            ensure!(
                !q.contains(&selected) && !a.contains(&selected),
                "#{n} {selected}: selected repeated"
            );
            let mut union: BTreeSet<_> = q.union(a).copied().collect();
            union.insert(selected);
            ensure!(
                &union == anf.canonical(),
                "#{n} {selected}: union differs from source"
            );
            let blocked = BTreeSet::from([selected, selected.reversed()]);
            let oracle = g
                .reachable_edges(selected.dependent(), &blocked)
                .map_err(|e| e.to_string())?;
            ensure!(
                a == &oracle,
                "#{n} {selected}: answer differs from reachability oracle"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!("{checked} partitions in {elapsed:?}"))
}

fn ac7_linearization_dedup(corpus: &[EncodedSyntagma]) -> Check {
    for (n, s) in corpus.iter().enumerate() {
        let anf = s.to_anf();
        for selected in anf.iter() {
            let part = partition(&anf, selected).map_err(|e| e.to_string())?;
            let line = linearize(&part, "which?");
            for (name, seq, term, anchor) in [
                ("tq", &line.tq, &part.question, selected.head()),
                ("ta", &line.ta, &part.answer, selected.dependent()),
            ] {
                let unique: BTreeSet<_> = seq.iter().collect();
                ensure!(
                    unique.len() == seq.len(),
                    "#{n} {selected}: repeated index in {name} {seq:?}"
                );
                let images = term.images();
                let justified = seq.iter().all(|i| *i == anchor || images.contains(i));
                ensure!(
                    justified,
                    "#{n} {selected}: unjustified index in {name} {seq:?}"
                );
                ensure!(
                    seq.first() == Some(&anchor),
                    "#{n} {selected}: {name} does not start at {anchor}"
                );
            }
        }
    }
    Ok("no repeats, every index justified".into())
}

fn ac8_round_trips(corpus: &[EncodedSyntagma]) -> Check {
    for (n, s) in corpus.iter().enumerate() {
        let back = parse_native(&render_native(s)).map_err(|e| format!("#{n}: {e}"))?;
        ensure!(&back == s, "#{n}: native round trip differs");
        let anf = s.to_anf();
        let first = anf.iter().next().expect("non-empty");
        let g = to_graph(&anf, s, &[(first, "which?".into())]).map_err(|e| e.to_string())?;
        let json = to_json(&g);
        let imported = from_json(&json).map_err(|e| format!("#{n}: {e}"))?;
        ensure!(imported == g, "#{n}: graph JSON round trip differs");
    }
    Ok(format!("{} native + {} JSON", corpus.len(), corpus.len()))
}

fn ac9_treebank_adapter() -> Check {
    let s = parse_treebank_subset(&data("example1.conllu"), &TreebankConfig::default())
        .map_err(|e| e.to_string())?;
    let expected = EncodedSyntagma::encode(
        [
            ("once", 3),
            ("I", 3),
            ("saw", 2),
            ("little", 5),
            ("bird", 3),
        ],
        Vec::new(),
    )
    .unwrap();
    ensure!(
        s == expected,
        "got {}",
        render_native(&s).replace('\n', " | ")
    );
    ensure!(
        s == example_one(),
        "differs from the native Example-1 input"
    );
    Ok("determiner and punctuation dropped".into())
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("AC1 example-1 ANF", Box::new(ac1_example_one_anf)),
        (
            "AC2 example-1 question 3\\1",
            Box::new(ac2_example_one_question),
        ),
        ("AC3 example-2 ANF and questions", Box::new(ac3_example_two)),
        ("AC4 trace replay", Box::new(ac4_trace_replay)),
        ("AC5 semigroup laws", Box::new(ac5_semigroup_laws)),
        (
            "AC6 partition soundness",
            Box::new(|| ac6_partition_soundness(&corpus)),
        ),
        (
            "AC7 linearization dedup",
            Box::new(|| ac7_linearization_dedup(&corpus)),
        ),
        ("AC8 round trips", Box::new(|| ac8_round_trips(&corpus))),
        ("AC9 treebank adapter", Box::new(ac9_treebank_adapter)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
