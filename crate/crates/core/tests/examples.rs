macro_rules! example_test {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(count_grid, "count_grid.rs");
example_test!(generating_function, "generating_function.rs");
example_test!(state_matrices, "state_matrices.rs");
example_test!(mosaics, "mosaics.rs");
example_test!(growth_bounds, "growth_bounds.rs");
example_test!(table_one, "table_one.rs");
example_test!(oracle_check, "oracle_check.rs");
example_test!(fekete, "fekete.rs");
example_test!(custom_weight, "custom_weight.rs");
