macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(stringify!($name));
        }
    };
}

example!(circle);
example!(ellipsoid);
example!(two_circles);
example!(torus);
example!(empty_detection);
example!(real_degree);
example!(circuit_gradient);
example!(polar_degrees);
example!(thom_encoding);
