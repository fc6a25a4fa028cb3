//! Deterministic Schreier-Sims.
//!
//! Base points are always the smallest point moved by the generator that
//! forces a new level, so the chain (and every order derived from it) is a
//! pure function of the generator list.

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps `point` to `x` for every `x` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let ux = self.transversal[x].clone().expect("orbit point has a transversal");
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(g));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Stabilizer chain with strong generators.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let pt = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(pt, degree));
            }
        }
        if !chain.levels.is_empty() {
            chain.levels[0].gens = gens;
            chain.levels[0].rebuild(degree);
            chain.complete();
        }
        chain
    }

    /// Adds Schreier generators until every level is closed.
    fn complete(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        // Generators at level i are those of level 0..=i that fix the
        // earlier base points; we keep them explicitly per level.
        for l in 1..self.levels.len() {
            let fixed: Vec<Perm> = self.levels[l - 1]
                .gens
                .iter()
                .filter(|g| g.apply(self.levels[l - 1].point) == self.levels[l - 1].point)
                .cloned()
                .collect();
            self.levels[l].gens = fixed;
            self.levels[l].rebuild(degree);
        }
        while i >= 0 {
            let lvl = i as usize;
            match self.find_missing(lvl) {
                None => i -= 1,
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let pt = residue.smallest_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(pt, degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild(degree);
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// First Schreier generator at `lvl` that fails to sift through the
    /// levels below it, with the level where sifting stopped.
    fn find_missing(&self, lvl: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[lvl];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for s in &level.gens {
                let y = s.apply(x);
                let uy = level.transversal[y].as_ref().unwrap();
                let h = ux.then(s).then(&uy.inverse());
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.strip_from(h, lvl + 1);
                if j < self.levels.len() || !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    fn strip_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let y = g.apply(level.point);
            match &level.transversal[y] {
                None => return (g, l),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every element, as products `h * u` with `u` in the top transversal.
    pub fn elements(&self) -> Vec<Perm> {
        let mut current = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(current.len() * level.orbit.len());
            for h in &current {
                for &x in &level.orbit {
                    next.push(h.then(level.transversal[x].as_ref().unwrap()));
                }
            }
            current = next;
        }
        current
    }
}
