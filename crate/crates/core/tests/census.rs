mod common;

use common::*;
use tridom::census::{
    find_extremal, read_json, read_rows_csv, run, run_census, verify_corpus, write_json, write_rows_csv,
    CensusConfig, CensusRow, Predicate, Property, ResultsFile, VerifyOptions,
};
use tridom::families::icosahedron;
use tridom::generator;
use tridom::solvers::{exact_gamma, exact_gamma_c};

fn without_times(rows: &[CensusRow]) -> Vec<CensusRow> {
    rows.iter()
        .cloned()
        .map(|mut r| {
            r.wall_time = 0.0;
            r
        })
        .collect()
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let mut cfg = CensusConfig::new(5, 11, 1);
    cfg.with_gamma = true;
    let one = run(&cfg).unwrap();
    for workers in [2, 8] {
        cfg.workers = workers;
        let other = run(&cfg).unwrap();
        assert_eq!(without_times(&other.rows), without_times(&one.rows));
        assert_eq!(other.corpus, one.corpus);
    }
}

#[test]
fn totals_match_flip_closure() {
    let rows = run_census(5, 10, 0).unwrap();
    for r in &rows {
        assert_eq!(r.total as usize, flip_closure(r.n).len(), "order {}", r.n);
        assert!(r.is_consistent());
    }
}

#[test]
fn universal_vertex_counts_match_polygon_triangulations() {
    // Removing a vertex of degree n - 1 leaves a triangulated (n-1)-gon, and
    // isomorphic triangulations give congruent polygons.
    let rows = run_census(5, 13, 0).unwrap();
    for r in &rows {
        assert_eq!(r.count(1) as usize, polygon_triangulations_up_to_symmetry(r.n - 1), "order {}", r.n);
    }
}

#[test]
fn corpus_properties_through_order_eleven() {
    let mut cfg = CensusConfig::new(5, 11, 0);
    cfg.with_gamma = true;
    let census = run(&cfg).unwrap();
    let rep = verify_corpus(&census.corpus, VerifyOptions::default());
    assert!(rep.is_clean(), "{:?}", rep.violations);
    let total: u64 = census.rows.iter().map(|r| r.total).sum();
    assert_eq!(rep.checked(Property::GammaCAtMostNMinusDelta), total);
    assert_eq!(rep.checked(Property::SolversAgree), 305);
    assert!(rep.checked(Property::DegreeNMinusFour) > 0);
    assert_eq!(rep.max_gamma_c.get(&9), Some(&3));
    assert_eq!(rep.max_gamma_c.get(&11), Some(&3));
}

#[test]
fn extremal_queries() {
    let mut cfg = CensusConfig::new(5, 12, 0);
    cfg.with_gamma = true;
    let corpus = run(&cfg).unwrap().corpus;
    let fours = find_extremal(&corpus, Predicate::GammaCEquals(4)).unwrap();
    assert_eq!(fours.len(), 5);
    assert!(fours.iter().all(|r| r.n == 12));
    let gaps = find_extremal(&corpus, Predicate::GapAtLeast(2)).unwrap();
    assert_eq!(gaps.len(), 2);
    let ico = icosahedron().triangulation.canonical_code();
    assert_eq!(gaps.iter().filter(|r| r.code == ico).count(), 1);
    for r in fours.iter().chain(&gaps) {
        assert!(r.verify().unwrap());
    }
}

#[test]
fn g9_record_survives_json() {
    let mut cfg = CensusConfig::new(9, 9, 1);
    cfg.with_gamma = true;
    let census = run(&cfg).unwrap();
    let records = find_extremal(&census.corpus, Predicate::GammaCDiffersFromGamma).unwrap();
    assert_eq!(records.len(), 1);
    let file = ResultsFile {
        rows: census.rows.clone(),
        records,
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g9.json");
    write_json(&file, std::fs::File::create(&path).unwrap()).unwrap();
    let back = read_json(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(back, file);
    let r = &back.records[0];
    let g = r.triangulation().unwrap().underlying_graph();
    assert_eq!(exact_gamma(&g).unwrap(), r.gamma);
    assert_eq!(exact_gamma_c(&g).unwrap().value, r.gamma_c.value);
    assert!(r.verify().unwrap());
}

#[test]
fn census_rows_survive_csv() {
    let rows = run_census(5, 11, 0).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    write_rows_csv(&rows, std::fs::File::create(&path).unwrap()).unwrap();
    let back = read_rows_csv(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(back, rows);
}

#[test]
fn external_planar_code_matches_generator() {
    // A shuffled, relabeled copy of a level deduplicates back to the level.
    let level = generator::enumerate_level(9).unwrap();
    let mut rng = seeded(9);
    let mut ts: Vec<_> = level
        .triangulations()
        .into_iter()
        .map(|t| t.relabel(&random_permutation(&mut rng, 9)).unwrap().mirror())
        .collect();
    ts.reverse();
    let bytes = tridom::embedding::planar_code::write(&ts).unwrap();
    let read = tridom::embedding::planar_code::read(&bytes).unwrap();
    let rebuilt = generator::Level::from_triangulations(9, &read).unwrap();
    assert_eq!(rebuilt.codes, level.codes);
}
