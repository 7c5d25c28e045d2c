use std::fmt::Write;

use super::terminals::{terminal_points, MatchingColour};
use super::{ChangingTrail, Colour, TwoColouredGraph};
use crate::schur::{Point, Step};

const UNIT: i64 = 40;
const MARGIN: i64 = 1;

/// Draws the graph with solid green and dotted blue strokes, the given
/// trails as a highlighted overlay, and the terminal sequence as black and
/// white dots. Lattice point `(x, y)` sits at canvas `(x*u, (N-y)*u)`.
pub fn render_svg(g: &TwoColouredGraph, trails: &[ChangingTrail]) -> String {
    let n = g.top();
    let mut xs: Vec<i64> = Vec::new();
    for c in [Colour::Blue, Colour::Green] {
        for (tail, step) in g.coloured_edges(c) {
            xs.push(tail.x);
            xs.push(tail.step(step).x);
        }
        for side in [super::Side::Top, super::Side::Bottom] {
            xs.extend(g.terminals(c, side).iter().map(|p| p.x));
        }
    }
    let (min_x, max_x) = (xs.iter().min().copied().unwrap_or(0), xs.iter().max().copied().unwrap_or(0));
    let (min_y, max_y) = (g.bottom().min(n), n);
    let cx = |x: i64| x * UNIT;
    let cy = |y: i64| (n - y) * UNIT;
    let (vx, vy) = (cx(min_x - MARGIN), cy(max_y + MARGIN));
    let (w, h) = ((max_x - min_x + 2 * MARGIN) * UNIT, (max_y - min_y + 2 * MARGIN) * UNIT);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {w} {h}" width="{w}" height="{h}">"#
    );
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for x in min_x - MARGIN..=max_x + MARGIN {
        let _ = writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, cx(x), cy(max_y + MARGIN), cy(min_y - MARGIN));
    }
    for y in min_y - MARGIN..=max_y + MARGIN {
        let _ = writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, cy(y), cx(min_x - MARGIN), cx(max_x + MARGIN));
    }
    s.push_str("</g>\n");

    let edge_line = |s: &mut String, tail: Point, step: Step, offset: i64| {
        let head = tail.step(step);
        // Doubly coloured edges are drawn side by side.
        let (dx, dy) = match step {
            Step::E => (0, offset),
            Step::N => (offset, 0),
        };
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            cx(tail.x) + dx,
            cy(tail.y) + dy,
            cx(head.x) + dx,
            cy(head.y) + dy
        );
    };
    let green = g.coloured_edges(Colour::Green);
    let blue = g.coloured_edges(Colour::Blue);
    s.push_str(r##"<g stroke="#1a8f3c" stroke-width="3" stroke-linecap="round">"##);
    s.push('\n');
    for &(tail, step) in &green {
        let shared = blue.binary_search(&(tail, step)).is_ok();
        edge_line(&mut s, tail, step, if shared { -3 } else { 0 });
    }
    s.push_str("</g>\n");
    s.push_str(r##"<g stroke="#1f4fd1" stroke-width="3" stroke-dasharray="2 6" stroke-linecap="round">"##);
    s.push('\n');
    for &(tail, step) in &blue {
        let shared = green.binary_search(&(tail, step)).is_ok();
        edge_line(&mut s, tail, step, if shared { 3 } else { 0 });
    }
    s.push_str("</g>\n");

    for t in trails {
        let pts: Vec<String> = t.vertices().iter().map(|p| format!("{},{}", cx(p.x), cy(p.y))).collect();
        let _ = writeln!(
            s,
            r##"<polyline class="trail" points="{}" fill="none" stroke="#d62728" stroke-width="7" stroke-opacity="0.45" stroke-linejoin="round"/>"##,
            pts.join(" ")
        );
    }

    for q in terminal_points(g) {
        let fill = match q.matching_colour {
            MatchingColour::Black => "#000000",
            MatchingColour::White => "#ffffff",
        };
        let p = q.location.point;
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="6" fill="{fill}" stroke="#000000" stroke-width="1.5"><title>Q{} {}</title></circle>"##,
            cx(p.x),
            cy(p.y),
            q.index,
            p
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::PathFamily;

    #[test]
    fn empty_graph_has_grid_only() {
        let g = TwoColouredGraph::new(&PathFamily::empty(), &PathFamily::empty()).unwrap();
        let svg = render_svg(&g, &[]);
        assert!(svg.starts_with("<svg"));
        assert!(!svg.contains("polyline"));
        assert!(!svg.contains("circle"));
    }

    #[test]
    fn trail_overlay_ends_at_terminal() {
        let blue = PathFamily::new(vec!["(-1,1):NE".parse().unwrap()]).unwrap();
        let green = PathFamily::new(vec!["(0,1):NE".parse().unwrap()]).unwrap();
        let g = TwoColouredGraph::new(&blue, &green).unwrap();
        let t = g.trace_from_point(Point::new(1, 2)).unwrap();
        let svg = render_svg(&g, std::slice::from_ref(&t));
        let end = t.vertices().last().copied().unwrap();
        assert!(svg.contains(&format!("{},{}\"", cx_of(end.x), (2 - end.y) * UNIT)));
        assert_eq!(svg, render_svg(&g, &[t]));
    }

    fn cx_of(x: i64) -> i64 {
        x * UNIT
    }
}
