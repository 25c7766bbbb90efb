use clap::Parser;
use moncoh::{Monomial, MonomialIdeal};
use moncoh_cli::{parse, render_json, run, Cli};
use proptest::prelude::*;

fn names(n: usize, long: bool) -> Vec<String> {
    (0..n)
        .map(|j| {
            if long {
                format!("x{}", j + 1)
            } else {
                ((b'a' + j as u8) as char).to_string()
            }
        })
        .collect()
}

fn exponent_vectors() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=12).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=5),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rendered_generators_parse_back((n, gens) in exponent_vectors(), long in any::<bool>(), star in any::<bool>()) {
        let vars = names(n, long);
        let rendered: Vec<String> = gens
            .iter()
            .map(|e| {
                let m = Monomial::new(e.clone()).render(&vars);
                if star { m } else { m.replace('*', "") }
            })
            .collect();
        let text = format!("vars {}\n{}\n", vars.join(" "), rendered.join(", "));
        let spec = parse(&text).unwrap();
        let expected: Vec<Monomial> = gens.into_iter().map(Monomial::new).collect();
        prop_assert_eq!(spec.gens, expected);
    }

    #[test]
    fn json_documents_reserialize_identically(bits in proptest::collection::vec(1u64..16, 1..=4), i in 0i64..=5) {
        let vars = names(4, false);
        let ideal = MonomialIdeal::squarefree(4, bits.into_iter().map(moncoh::VarSet::from_bits)).unwrap();
        let body: Vec<String> = ideal.gens().iter().map(|g| g.render(&vars)).collect();
        let dir = std::env::temp_dir().join(format!("moncoh-roundtrip-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{}.ideal", body.join("_")));
        std::fs::write(&path, format!("vars a b c d\n{}\n", body.join(", "))).unwrap();
        let p = path.to_str().unwrap().to_string();
        let i = i.to_string();
        for args in [
            vec!["moncoh", "--json", "dual", &p],
            vec!["moncoh", "--json", "betti", "--of", "dual", &p],
            vec!["moncoh", "--json", "filtration", "--i", &i, &p],
            vec!["moncoh", "--json", "ass", "--i", &i, &p],
            vec!["moncoh", "--json", "hilbert", "--i", &i, "--box", "-1..1", &p],
            vec!["moncoh", "--json", "check", &p],
        ] {
            let out = run(&Cli::parse_from(&args)).unwrap();
            let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
            prop_assert_eq!(render_json(&doc), out.stdout);
        }
    }
}
