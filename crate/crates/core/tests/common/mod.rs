#![allow(dead_code)]

use braidlift_core::groupoid::{GroupoidPresentation, GroupoidWord, Letter, Object};

/// All letters (both orientations) leaving `obj`.
pub fn letters_from(pres: &GroupoidPresentation, obj: Object) -> Vec<Letter> {
    let mut out = Vec::new();
    for a in pres.arrows() {
        let (s, t) = pres.endpoints(a).unwrap();
        if s == obj {
            out.push(Letter::pos(a));
        }
        if t == obj {
            out.push(Letter::neg(a));
        }
    }
    out
}

/// A random walk driven by `choices`, starting at object number `start`.
/// The walk is composable by construction and usually not reduced.
pub fn walk(pres: &GroupoidPresentation, start: usize, choices: &[usize]) -> GroupoidWord {
    let objects = pres.objects();
    let from = objects[start % objects.len()];
    walk_from(pres, from, choices)
}

pub fn walk_from(pres: &GroupoidPresentation, from: Object, choices: &[usize]) -> GroupoidWord {
    let mut at = from;
    let mut letters = Vec::new();
    for &c in choices {
        let options = letters_from(pres, at);
        let l = options[c % options.len()];
        let (s, t) = pres.endpoints(l.arrow).unwrap();
        at = if l.inverse { s } else { t };
        letters.push(l);
    }
    pres.word_from(from, &letters).unwrap()
}

/// A random loop at `base`: a walk followed by the reverse of a second walk
/// that is forced back to `base` through `tree_back`.
pub fn random_loop(
    pres: &GroupoidPresentation,
    base: Object,
    choices: &[usize],
    back: impl Fn(Object) -> GroupoidWord,
) -> GroupoidWord {
    let w = walk_from(pres, base, choices);
    let ret = back(w.target());
    w.concat(&ret).unwrap()
}
