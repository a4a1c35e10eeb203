// Every cargo example runs to completion.

mod exterior_calculus {
    #![allow(dead_code)]
    include!("../examples/exterior_calculus.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod dimension_table {
    #![allow(dead_code)]
    include!("../examples/dimension_table.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod koszul_exactness {
    #![allow(dead_code)]
    include!("../examples/koszul_exactness.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod serendipity_basis {
    #![allow(dead_code)]
    include!("../examples/serendipity_basis.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod unisolvence {
    #![allow(dead_code)]
    include!("../examples/unisolvence.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod vanishing_traces {
    #![allow(dead_code)]
    include!("../examples/vanishing_traces.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod commuting_projection {
    #![allow(dead_code)]
    include!("../examples/commuting_projection.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod vector_proxies_3d {
    #![allow(dead_code)]
    include!("../examples/vector_proxies_3d.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod mesh_complex {
    #![allow(dead_code)]
    include!("../examples/mesh_complex.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}
