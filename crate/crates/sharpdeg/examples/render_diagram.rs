// ASCII and SVG pictures of a diagram.

use sharpdeg::cli::{render_diagram, Format};
use sharpdeg::constructions::{faran_cubics, whitney};
use sharpdeg::diagram::NewtonDiagram;
use sharpdeg::poly::{divide_by_s, homogenize_and_flip};

fn diagram_of(p: &sharpdeg::Polynomial) -> NewtonDiagram {
    let q = divide_by_s(&homogenize_and_flip(p).unwrap()).unwrap();
    NewtonDiagram::of(&q, p.degree().unwrap()).unwrap()
}

pub fn run_example() {
    let (p2, _) = faran_cubics();
    print!("{}", render_diagram(&diagram_of(&p2), Format::Ascii).unwrap());
    let svg = render_diagram(&diagram_of(&whitney(3, 3, None).unwrap()), Format::Svg).unwrap();
    println!("whitney(3,3) svg: {} bytes, {} markers", svg.len(), svg.matches("class=\"marker").count());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
