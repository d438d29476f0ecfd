//! Deterministic SVG rendering of flat-disk chord diagrams.
//!
//! The boundary circle carries `4k` labeled points; the `V` family is
//! drawn solid, the `W` family dashed. Output is plain text with fixed
//! two-decimal coordinates, so identical inputs yield identical bytes.

use crate::chords::ChordFamilies;

const R: f64 = 100.0;
const CENTER: f64 = 120.0;
const LABEL_R: f64 = 111.0;

fn point(n: u32, label: u32) -> (f64, f64) {
    // Label 1 sits at the top; labels increase clockwise.
    let theta = std::f64::consts::TAU * f64::from(label - 1) / f64::from(n)
        - std::f64::consts::FRAC_PI_2;
    (CENTER + R * theta.cos(), CENTER + R * theta.sin())
}

/// Renders the chord diagram of a spiral boundary.
pub fn chord_diagram_svg(fam: &ChordFamilies) -> String {
    let n = fam.circle_len();
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" \
         viewBox=\"0 0 240 240\">\n",
    );
    s.push_str(&format!(
        "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{R}\" fill=\"none\" \
         stroke=\"#444444\" stroke-width=\"1\"/>\n"
    ));
    for (chords, color, dash) in
        [(fam.v(), "#1f6fb4", ""), (fam.w(), "#c23b22", " stroke-dasharray=\"6 3\"")]
    {
        for c in chords {
            let (a, b) = c.endpoints();
            let (x1, y1) = point(n, a);
            let (x2, y2) = point(n, b);
            s.push_str(&format!(
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
                 stroke=\"{color}\" stroke-width=\"1.5\"{dash}/>\n"
            ));
        }
    }
    for label in 1..=n {
        let (x, y) = point(n, label);
        s.push_str(&format!("  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\" fill=\"#222222\"/>\n"));
        let lr = LABEL_R / R;
        let (lx, ly) = (CENTER + (x - CENTER) * lr, CENTER + (y - CENTER) * lr);
        s.push_str(&format!(
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"9\" text-anchor=\"middle\" \
             dominant-baseline=\"middle\" fill=\"#222222\">{label}</text>\n"
        ));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chords::synthetic_chords;

    #[test]
    fn rendering_is_deterministic_and_complete() {
        let fam = synthetic_chords(3, 2).unwrap();
        let one = chord_diagram_svg(&fam);
        let two = chord_diagram_svg(&fam);
        assert_eq!(one, two);
        assert_eq!(one.matches("<line").count(), 6);
        assert_eq!(one.matches("<text").count(), 12);
        assert_eq!(one.matches("stroke-dasharray").count(), 3);
        assert!(one.starts_with("<svg"));
        assert!(one.ends_with("</svg>\n"));
    }

    #[test]
    fn octagon_renders_two_chords() {
        let svg = chord_diagram_svg(&synthetic_chords(2, 2).unwrap());
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<text").count(), 8);
    }
}
