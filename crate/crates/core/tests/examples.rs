//! Every example is compiled in here as well and run with its defaults.

macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(count_cliques, "count_cliques.rs", count_cliques_runs);
example!(clustering, "clustering.rs", clustering_runs);
example!(clique_profiles, "clique_profiles.rs", clique_profiles_runs);
example!(
    temporal_trajectory,
    "temporal_trajectory.rs",
    temporal_trajectory_runs
);
example!(
    classify_synthetic,
    "classify_synthetic.rs",
    classify_synthetic_runs
);
example!(
    tudataset_classify,
    "tudataset_classify.rs",
    tudataset_classify_runs
);
example!(
    votes_to_tudataset,
    "votes_to_tudataset.rs",
    votes_to_tudataset_runs
);
