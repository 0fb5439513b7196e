use clap::Parser;
use qconvex::circleseq::{sweep, truncated_hull, QSeq, DEFAULT_BUDGET};
use qconvex::cli::{run, Cli};
use qconvex::verify::run_all;
use qconvex::FiniteAbelianGroup;

fn pool(n: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .unwrap()
}

#[test]
fn hulls_do_not_depend_on_thread_count() {
    let g: FiniteAbelianGroup = "Z6 x Z10 x Z7".parse().unwrap();
    let e = g.parse_set("(0,0,0),(1,0,0),(5,0,0),(0,3,2)").unwrap();
    let one = pool(1).install(|| (g.polar(&e).unwrap(), g.qc_hull(&e).unwrap()));
    let many = pool(8).install(|| (g.polar(&e).unwrap(), g.qc_hull(&e).unwrap()));
    assert_eq!(one, many);

    let q = QSeq::new(vec![8, 9, 10]).unwrap();
    let one = pool(1).install(|| truncated_hull(&q, DEFAULT_BUDGET).unwrap());
    let many = pool(8).install(|| truncated_hull(&q, DEFAULT_BUDGET).unwrap());
    assert_eq!(one.hull, many.hull);
    assert_eq!(one.evaluations, many.evaluations);

    let one = pool(1).install(|| sweep(2, 5, 2, DEFAULT_BUDGET).unwrap());
    let many = pool(8).install(|| sweep(2, 5, 2, DEFAULT_BUDGET).unwrap());
    assert_eq!(one, many);
}

#[test]
fn cli_output_is_byte_identical_across_thread_counts() {
    let cli = Cli::parse_from(["qconvex", "--json", "check-seq", "7,4,8"]);
    let one = pool(1).install(|| run(&cli));
    let many = pool(8).install(|| run(&cli));
    assert_eq!(one, many);
    assert_eq!(run(&cli), run(&cli));
}

#[test]
fn verify_is_reproducible_for_a_seed() {
    assert_eq!(run_all(7, 20), run_all(7, 20));
    assert_ne!(
        run_all(7, 20).iter().map(|r| r.cases).collect::<Vec<_>>(),
        Vec::<usize>::new()
    );
}
