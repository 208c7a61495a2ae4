macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(decide_presentation, "decide_presentation.rs", decide_presentation_runs);
example!(witness, "witness_and_identity_word.rs", witness_and_identity_word_runs);
example!(weyl_arithmetic, "weyl_arithmetic.rs", weyl_arithmetic_runs);
example!(symmetric_tensor_maps, "symmetric_tensor_maps.rs", symmetric_tensor_maps_runs);
example!(enumerate_small_ranks, "enumerate_small_ranks.rs", enumerate_small_ranks_runs);
example!(f2_elimination, "f2_elimination.rs", f2_elimination_runs);
