//! File emitters for region samples: CSV, JSON and a ternary-plot SVG. All
//! three are deterministic byte-for-byte for a fixed sample list.

use serde::Serialize;

use trifood::regions::LabeledPoint;

/// CSV with a fixed header; numbers carry 17 significant digits so values
/// round-trip exactly.
pub fn csv(points: &[LabeledPoint]) -> String {
    let mut out = String::from("P0,P1,P2,model,class\n");
    for lp in points {
        let [p0, p1, p2] = lp.point.components();
        out.push_str(&format!(
            "{p0:.16e},{p1:.16e},{p2:.16e},{},{}\n",
            lp.model.label(),
            lp.class.label()
        ));
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    p0: f64,
    p1: f64,
    p2: f64,
    model: &'static str,
    class: String,
}

pub fn json(points: &[LabeledPoint]) -> String {
    let rows: Vec<JsonRow> = points
        .iter()
        .map(|lp| {
            let [p0, p1, p2] = lp.point.components();
            JsonRow {
                p0,
                p1,
                p2,
                model: lp.model.label(),
                class: lp.class.label(),
            }
        })
        .collect();
    let mut body = serde_json::to_string_pretty(&rows).expect("rows serialize");
    body.push('\n');
    body
}

/// Marker colour for a class label.
fn color(class_label: &str) -> &'static str {
    if class_label.starts_with("transitive") {
        "#1f77b4"
    } else {
        match class_label {
            "cycle_a" => "#d62728",
            "cycle_b" => "#2ca02c",
            _ => "#7f7f7f",
        }
    }
}

/// Scatter plot in barycentric coordinates: the simplex drawn as an
/// equilateral triangle with P0 at the lower left, P1 at the lower right and
/// P2 at the top.
pub fn svg(points: &[LabeledPoint]) -> String {
    // Triangle corners in pixel space.
    let a = (40.0, 460.0);
    let b = (460.0, 460.0);
    let c = (250.0, 460.0 - 420.0 * 3.0_f64.sqrt() / 2.0);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<!-- color legend: transitive #1f77b4, cycle_a #d62728, cycle_b #2ca02c, \
         boundary #7f7f7f -->\n",
    );
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n",
    );
    out.push_str(&format!(
        "  <polygon points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\" \
         fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n",
        a.0, a.1, b.0, b.1, c.0, c.1
    ));
    for lp in points {
        let [p0, p1, p2] = lp.point.components();
        let x = p0 * a.0 + p1 * b.0 + p2 * c.0;
        let y = p0 * a.1 + p1 * b.1 + p2 * c.1;
        out.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2\" fill=\"{}\"/>\n",
            color(&lp.class.label())
        ));
    }
    out.push_str("</svg>\n");
    out
}
