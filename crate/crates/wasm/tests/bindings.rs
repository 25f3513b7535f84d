use trisquare_wasm::{polygon_figure, polygon_vertices, realize_blueprint, sample_figure, MAX_SAMPLES};

#[test]
fn polygon_operations() {
    let svg = polygon_figure(4, false).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("(2/3, 0)"));
    assert_eq!(svg, polygon_figure(4, false).unwrap());
    let verts: serde_json::Value = serde_json::from_str(&polygon_vertices(3).unwrap()).unwrap();
    assert_eq!(verts.as_array().unwrap().len(), 4);
    assert_eq!(verts[3]["y"]["num"], "3");
    assert!(polygon_figure(2, false).is_err());
}

#[test]
fn sampling_is_seeded() {
    let a = sample_figure(3, 20, 25, 9).unwrap();
    assert_eq!(a, sample_figure(3, 20, 25, 9).unwrap());
    assert_eq!(a.matches("r=\"1.5\"").count(), 25);
    assert!(sample_figure(3, 21, 5, 0).is_err());
    assert!(sample_figure(3, 20, MAX_SAMPLES + 1, 0).is_err());
}

#[test]
fn realize_from_fraction_strings() {
    let b: serde_json::Value = serde_json::from_str(&realize_blueprint(3, "1/2", " 0.75 ").unwrap()).unwrap();
    assert_eq!(b["total_order"], "120");
    assert!(realize_blueprint(3, "2", "0").unwrap_err().contains("outside"));
    assert!(realize_blueprint(3, "x", "0").is_err());
}
