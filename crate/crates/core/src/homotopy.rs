//! Cylinder, cones, suspension, spheres and their right adjoints over
//! finite interval models.
//!
//! An interval model is a finite space `J` with two end points. The
//! constructions below only use the smash products, quotients and
//! exponentials of the finite engine, so the structural identities
//! (colimit descriptions, smash formulas, adjunctions) can be checked
//! exactly. Nothing here claims that a model has the homotopy type of the
//! real interval or circle.

use thiserror::Error;

use crate::expo::{pointed_exponential, Adjunction, AdjunctionReport, ExpSpace, ExpoError};
use crate::finspace::{
    disjoint_union, point_set, quotient, quotient_by_classes, FinSpace, PointSet, Product, SpaceError,
};
use crate::pointed::{
    add_basepoint, cokernel, find_pointed_homeomorphism, kernel, nary_smash, smash, smash_power, NarySmash, ParenTree,
    PointedError, PtMap, PtSpace, SmashCache,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Pointed(#[from] PointedError),
    #[error(transparent)]
    Expo(#[from] ExpoError),
    #[error("invalid interval model: {0}")]
    Model(String),
    #[error("unknown interval model {0:?}; expected interval3 or interval5")]
    UnknownModel(String),
    #[error("map does not descend: points {0} and {1} of one fibre have different images")]
    NotConstantOnFibres(usize, usize),
    #[error("map does not descend: the projection misses point {0}")]
    NotSurjective(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }
}

/// A finite interval `J` with end points `j⁻ != j⁺`.
#[derive(Clone, Debug)]
pub struct IntervalModel {
    name: String,
    j: FinSpace,
    minus: usize,
    plus: usize,
    circle: PtSpace,
    circle_projection: Vec<usize>,
}

impl IntervalModel {
    pub fn new(name: &str, j: FinSpace, minus: usize, plus: usize) -> Result<Self, HomotopyError> {
        if minus == plus || minus >= j.len() || plus >= j.len() {
            return Err(HomotopyError::Model(format!(
                "end points {minus} and {plus} must be distinct points of a {}-point space",
                j.len()
            )));
        }
        let mut blocks = vec![vec![minus.min(plus), minus.max(plus)]];
        blocks.extend((0..j.len()).filter(|&p| p != minus && p != plus).map(|p| vec![p]));
        let q = quotient(&j, &blocks)?;
        let circle = PtSpace::new(q.space.relabel(relabel_base(&q.space)), 0)?;
        Ok(IntervalModel {
            name: name.to_string(),
            j,
            minus,
            plus,
            circle,
            circle_projection: q.projection.assignment().to_vec(),
        })
    }

    /// The fence `0 <= 1 >= 2` with end points 0 and 2; its circle is the
    /// Sierpinski space.
    pub fn interval3() -> Self {
        IntervalModel::new("interval3", fence(3), 0, 2).unwrap()
    }

    /// The fence `0 <= 1 >= 2 <= 3 >= 4` with end points 0 and 4; its
    /// circle is the four-point pseudocircle.
    pub fn interval5() -> Self {
        IntervalModel::new("interval5", fence(5), 0, 4).unwrap()
    }

    pub fn by_name(name: &str) -> Result<Self, HomotopyError> {
        match name {
            "interval3" => Ok(IntervalModel::interval3()),
            "interval5" => Ok(IntervalModel::interval5()),
            other => Err(HomotopyError::UnknownModel(other.to_string())),
        }
    }

    pub fn shipped() -> Vec<IntervalModel> {
        vec![IntervalModel::interval3(), IntervalModel::interval5()]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &FinSpace {
        &self.j
    }

    pub fn end(&self, side: Side) -> usize {
        match side {
            Side::Minus => self.minus,
            Side::Plus => self.plus,
        }
    }

    /// `J_• = J + {*}`; the points of `J` keep their indices.
    pub fn pointed_interval(&self) -> PtSpace {
        add_basepoint(&self.j)
    }

    /// `J` pointed at an end.
    pub fn pointed_at(&self, side: Side) -> PtSpace {
        PtSpace::new(self.j.clone(), self.end(side)).unwrap()
    }

    /// `J / {j⁻, j⁺}`, pointed at the collapsed ends.
    pub fn circle(&self) -> &PtSpace {
        &self.circle
    }

    /// Index in the circle of each point of `J`.
    pub fn circle_projection(&self) -> &[usize] {
        &self.circle_projection
    }
}

fn relabel_base(s: &FinSpace) -> Vec<String> {
    let mut l = s.labels().to_vec();
    l[0] = "0".into();
    l
}

/// Zigzag `0 <= 1 >= 2 <= 3 ...`: even points are closed, odd points open.
fn fence(n: usize) -> FinSpace {
    let up = (0..n)
        .map(|i| {
            if i % 2 == 1 {
                point_set(n, [i])
            } else {
                point_set(
                    n,
                    [i].into_iter()
                        .chain(i.checked_sub(1))
                        .chain((i + 1 < n).then_some(i + 1)),
                )
            }
        })
        .collect();
    let labels = (0..n).map(|i| format!("j{i}")).collect();
    FinSpace::from_preorder(&crate::finspace::Preorder::from_up_sets(labels, up).unwrap())
}

/// The map `g` on the codomain of the surjection `q` with `g ∘ q = f`.
pub fn descend(q: &PtMap, f: &PtMap) -> Result<PtMap, HomotopyError> {
    let mut g = vec![usize::MAX; q.cod().len()];
    let mut witness = vec![usize::MAX; q.cod().len()];
    for x in 0..q.dom().len() {
        let b = q.apply(x);
        if g[b] == usize::MAX {
            g[b] = f.apply(x);
            witness[b] = x;
        } else if g[b] != f.apply(x) {
            return Err(HomotopyError::NotConstantOnFibres(witness[b], x));
        }
    }
    if let Some(b) = g.iter().position(|&v| v == usize::MAX) {
        return Err(HomotopyError::NotSurjective(b));
    }
    Ok(PtMap::new(q.cod().clone(), f.cod().clone(), g)?)
}

/// A colimit of pointed spaces, with its legs.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub space: PtSpace,
    pub legs: Vec<PtMap>,
}

/// The colimit of a finite diagram of pointed spaces: the sum of the
/// objects with all basepoints identified and `x ~ f(x)` for each arrow.
pub fn colimit(objects: &[PtSpace], arrows: &[(usize, usize, PtMap)]) -> Result<Colimit, HomotopyError> {
    let spaces: Vec<FinSpace> = objects.iter().map(|o| o.space().clone()).collect();
    let (sum, inj) = disjoint_union(&spaces);
    let mut parent: Vec<usize> = (0..sum.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    let base0 = inj[0].apply(objects[0].base());
    for (o, i) in objects.iter().zip(&inj) {
        union(base0, i.apply(o.base()));
    }
    for (s, t, f) in arrows {
        if f.dom() != &objects[*s] || f.cod() != &objects[*t] {
            return Err(HomotopyError::Model(format!(
                "arrow {s} -> {t} does not match its objects"
            )));
        }
        for x in 0..f.dom().len() {
            union(inj[*s].apply(x), inj[*t].apply(f.apply(x)));
        }
    }
    let roots: Vec<usize> = (0..sum.len()).map(|x| find(&mut parent, x)).collect();
    let base_root = roots[base0];
    let mut class = vec![usize::MAX; sum.len()];
    let mut ids = std::collections::HashMap::new();
    ids.insert(base_root, 0);
    for x in 0..sum.len() {
        let n = ids.len();
        class[x] = *ids.entry(roots[x]).or_insert(n);
    }
    let q = quotient_by_classes(&sum, &class, ids.len(), |m| {
        if m.contains(&base0) {
            "0".into()
        } else {
            m.iter().map(|&x| sum.label(x)).collect::<Vec<_>>().join("~")
        }
    });
    let space = PtSpace::new(q.space, 0)?;
    let legs = objects
        .iter()
        .zip(&inj)
        .map(|(o, i)| {
            PtMap::new(
                o.clone(),
                space.clone(),
                i.assignment().iter().map(|&x| class[x]).collect(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Colimit { space, legs })
}

pub fn pushout(f: &PtMap, g: &PtMap) -> Result<Colimit, HomotopyError> {
    colimit(
        &[f.dom().clone(), f.cod().clone(), g.cod().clone()],
        &[(0, 1, f.clone()), (0, 2, g.clone())],
    )
}

fn point_space() -> PtSpace {
    crate::pointed::zero_object()
}

/// `IX = X ∧ J_•` with its faces, and the fibre-collapse description
/// `(|X| × J) / ({0} × J)`.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub smash: NarySmash,
    pub fibre_collapse: PtSpace,
    /// `(|X| × J)/({0} × J) -> X ∧ J_•`.
    pub comparison: PtMap,
    pub minus: PtMap,
    pub plus: PtMap,
}

impl Cylinder {
    pub fn space(&self) -> &PtSpace {
        self.smash.space()
    }

    pub fn face(&self, side: Side) -> &PtMap {
        match side {
            Side::Minus => &self.minus,
            Side::Plus => &self.plus,
        }
    }

    /// `(x, j)` for a non-base point of the cylinder.
    pub fn coords(&self, p: usize) -> Option<(usize, usize)> {
        self.smash.representative(p).map(|c| (c[0], c[1]))
    }
}

pub fn cylinder(x: &PtSpace, m: &IntervalModel) -> Result<Cylinder, HomotopyError> {
    let jb = m.pointed_interval();
    let sm = smash(x, &jb);
    let p = Product::new(&[x.space().clone(), m.space().clone()]);
    let nj = m.space().len();
    let mut blocks = vec![(0..nj).map(|j| p.encode(&[x.base(), j])).collect::<Vec<_>>()];
    blocks.extend(
        (0..p.space().len())
            .filter(|&i| p.coord(i, 0) != x.base())
            .map(|i| vec![i]),
    );
    let q = quotient(p.space(), &blocks)?;
    let collapsed = PtSpace::new(q.space.clone(), 0)?;
    let a = q
        .blocks
        .iter()
        .map(|b| {
            if b.len() > 1 || x.len() == 1 {
                sm.space().base()
            } else {
                sm.eta(&p.decode(b[0]))
            }
        })
        .collect();
    let comparison = PtMap::new(collapsed.clone(), sm.space().clone(), a)?;
    let face = |side: Side| {
        let e = m.end(side);
        PtMap::new(
            x.clone(),
            sm.space().clone(),
            (0..x.len()).map(|v| sm.eta(&[v, e])).collect(),
        )
    };
    Ok(Cylinder {
        minus: face(Side::Minus)?,
        plus: face(Side::Plus)?,
        fibre_collapse: collapsed,
        comparison,
        smash: sm,
    })
}

/// `C^α X`, built as the cokernel of the face `∂^α` and as `X ∧ J_α`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub side: Side,
    pub smash: NarySmash,
    pub cokernel: PtSpace,
    /// `γ : IX -> Coker ∂^α`.
    pub projection: PtMap,
    /// `Coker ∂^α -> X ∧ J_α`.
    pub comparison: PtMap,
}

impl Cone {
    pub fn space(&self) -> &PtSpace {
        self.smash.space()
    }
}

/// `IX -> X ∧ A` sending `x ∧ j` to `x ∧ π(j)` for a map `π` from `J` to
/// the points of `A`.
fn from_cylinder(cyl: &Cylinder, target: &NarySmash, pi: impl Fn(usize) -> usize) -> Result<PtMap, HomotopyError> {
    let a = (0..cyl.space().len())
        .map(|p| match cyl.coords(p) {
            None => target.space().base(),
            Some((x, j)) => target.eta(&[x, pi(j)]),
        })
        .collect();
    Ok(PtMap::new(cyl.space().clone(), target.space().clone(), a)?)
}

pub fn cone(x: &PtSpace, m: &IntervalModel, side: Side) -> Result<Cone, HomotopyError> {
    let cyl = cylinder(x, m)?;
    cone_on(&cyl, x, m, side)
}

fn cone_on(cyl: &Cylinder, x: &PtSpace, m: &IntervalModel, side: Side) -> Result<Cone, HomotopyError> {
    let (coker, proj) = cokernel(cyl.face(side));
    let sm = smash(x, &m.pointed_at(side));
    let to_smash = from_cylinder(cyl, &sm, |j| j)?;
    let comparison = descend(&proj, &to_smash)?;
    Ok(Cone {
        side,
        smash: sm,
        cokernel: coker,
        projection: proj,
        comparison,
    })
}

/// An explicit homeomorphism `C⁺X -> C⁻X`, from a homeomorphism
/// `J_+ -> J_-`.
pub fn cone_flip(x: &PtSpace, m: &IntervalModel) -> Result<Option<PtMap>, HomotopyError> {
    let jp = m.pointed_at(Side::Plus);
    let jm = m.pointed_at(Side::Minus);
    let crate::finspace::HomeoSearch::Found(r) = find_pointed_homeomorphism(&jp, &jm, u64::MAX) else {
        return Ok(None);
    };
    let r = PtMap::from_cmap(jp.clone(), jm.clone(), r)?;
    let (_, _, f) = crate::pointed::smash_maps(&[PtMap::identity(x), r])?;
    Ok(Some(f).filter(|f| f.is_homeomorphism()))
}

/// The four descriptions of `ΣX`, each with its projection from `IX`.
#[derive(Clone, Debug)]
pub struct Suspension {
    pub cylinder: Cylinder,
    /// Colimit of the face diagram.
    pub colimit: Colimit,
    /// Two cones glued by a pushout over `IX`.
    pub pushouts: Colimit,
    /// `Coker(∂⁻ : X -> C⁺X)`.
    pub cone_quotient: PtSpace,
    /// `X ∧ S¹` for the model circle.
    pub smash: NarySmash,
    /// `σ` from `IX` onto each description, in the order above.
    pub sigma: [PtMap; 4],
}

impl Suspension {
    pub fn space(&self) -> &PtSpace {
        self.smash.space()
    }

    pub fn spaces(&self) -> [&PtSpace; 4] {
        [
            &self.colimit.space,
            &self.pushouts.space,
            &self.cone_quotient,
            self.smash.space(),
        ]
    }

    /// The comparison `Σ_i -> Σ_k` induced through `IX`.
    pub fn comparison(&self, i: usize, k: usize) -> Result<PtMap, HomotopyError> {
        descend(&self.sigma[i], &self.sigma[k])
    }

    /// Every pairwise comparison is a homeomorphism.
    pub fn constructions_agree(&self) -> Result<bool, HomotopyError> {
        for i in 0..4 {
            for k in 0..4 {
                if i != k && !self.comparison(i, k)?.is_homeomorphism() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn suspension(x: &PtSpace, m: &IntervalModel) -> Result<Suspension, HomotopyError> {
    let cyl = cylinder(x, m)?;
    let ix = cyl.space().clone();
    let pt = point_space();
    let to_pt = PtMap::zero(x, &pt);

    let colim = colimit(
        &[x.clone(), x.clone(), ix.clone(), pt.clone(), pt.clone()],
        &[
            (0, 2, cyl.plus.clone()),
            (0, 3, to_pt.clone()),
            (1, 2, cyl.minus.clone()),
            (1, 4, to_pt.clone()),
        ],
    )?;
    let s1 = colim.legs[2].clone();

    let upper = pushout(&cyl.plus, &to_pt)?;
    let lower = pushout(&cyl.minus, &to_pt)?;
    let glued = pushout(&upper.legs[1], &lower.legs[1])?;
    let s2 = upper.legs[1].then(&glued.legs[1])?;

    let cplus = cone_on(&cyl, x, m, Side::Plus)?;
    let lower_face = cyl.minus.then(&cplus.projection)?;
    let (cq, cq_proj) = cokernel(&lower_face);
    let s3 = cplus.projection.then(&cq_proj)?;

    let sm = smash(x, m.circle());
    let s4 = from_cylinder(&cyl, &sm, |j| m.circle_projection()[j])?;

    Ok(Suspension {
        cylinder: cyl,
        colimit: colim,
        pushouts: glued,
        cone_quotient: cq,
        smash: sm,
        sigma: [s1, s2, s3, s4],
    })
}

/// `Σⁿ X` by iterated smash with the circle.
pub fn iterated_suspension(x: &PtSpace, m: &IntervalModel, n: usize) -> PtSpace {
    let mut s = x.clone();
    for _ in 0..n {
        s = smash(&s, m.circle()).space().clone();
    }
    s
}

/// The model sphere `(S¹)^∧n`, with `S⁰` for `n = 0`.
pub fn sphere_model(n: usize, m: &IntervalModel) -> PtSpace {
    smash_power(m.circle(), n)
}

/// `Jⁿ / ∂Jⁿ`, collapsing the points with some coordinate at an end, and
/// its comparison with the n-fold smash of circles.
pub fn cube_quotient(n: usize, m: &IntervalModel) -> Result<(PtSpace, PtMap), HomotopyError> {
    let factors = vec![m.space().clone(); n];
    let p = Product::new(&factors);
    let on_boundary = |i: usize| p.decode(i).iter().any(|&c| c == m.minus || c == m.plus);
    let mut boundary: Vec<usize> = (0..p.space().len()).filter(|&i| on_boundary(i)).collect();
    if boundary.is_empty() {
        // n = 0: the one-point cube with empty boundary gives S⁰
        let s0 = add_basepoint(p.space());
        return Ok((s0.clone(), PtMap::identity(&s0)));
    }
    let mut blocks = vec![std::mem::take(&mut boundary)];
    blocks.extend((0..p.space().len()).filter(|&i| !on_boundary(i)).map(|i| vec![i]));
    let q = quotient(p.space(), &blocks)?;
    let cube = PtSpace::new(q.space.clone(), 0)?;
    let sm = nary_smash(&vec![m.circle().clone(); n]);
    let a = q
        .blocks
        .iter()
        .enumerate()
        .map(|(b, members)| {
            if b == 0 {
                sm.space().base()
            } else {
                let c: Vec<usize> = p.decode(members[0]).iter().map(|&j| m.circle_projection()[j]).collect();
                sm.eta(&c)
            }
        })
        .collect();
    let cmp = PtMap::new(cube.clone(), sm.space().clone(), a)?;
    Ok((cube, cmp))
}

/// `X/H`, collapsing a nonempty `H` to the basepoint; for empty `H` this
/// is `X_•`. Returns the pointed space and the image of each point of `X`.
pub fn relative_quotient(x: &FinSpace, h: &PointSet) -> Result<(PtSpace, Vec<usize>), HomotopyError> {
    if h.count_ones(..) == 0 {
        return Ok((add_basepoint(x), (0..x.len()).collect()));
    }
    let mut blocks = vec![h.ones().collect::<Vec<_>>()];
    blocks.extend((0..x.len()).filter(|&i| !h.contains(i)).map(|i| vec![i]));
    let q = quotient(x, &blocks)?;
    Ok((PtSpace::new(q.space.clone(), 0)?, q.projection.assignment().to_vec()))
}

/// The comparison `(X×Y)/(X×K ∪ H×Y) -> X/H ∧ Y/K`, `[x, y] ↦ [x] ∧ [y]`.
/// The pair quotient follows the same convention: with `X×K ∪ H×Y` empty
/// it is `(X×Y)_•`.
pub fn quotient_smash_formula(x: &FinSpace, h: &PointSet, y: &FinSpace, k: &PointSet) -> Result<PtMap, HomotopyError> {
    let (xh, qx) = relative_quotient(x, h)?;
    let (yk, qy) = relative_quotient(y, k)?;
    let sm = smash(&xh, &yk);
    let p = Product::new(&[x.clone(), y.clone()]);
    let sub = point_set(
        p.space().len(),
        (0..p.space().len()).filter(|&i| {
            let c = p.decode(i);
            h.contains(c[0]) || k.contains(c[1])
        }),
    );
    let (pair, qp) = relative_quotient(p.space(), &sub)?;
    let mut a = vec![usize::MAX; pair.len()];
    a[pair.base()] = sm.space().base();
    for i in 0..p.space().len() {
        let c = p.decode(i);
        let img = sm.eta(&[qx[c[0]], qy[c[1]]]);
        let slot = &mut a[qp[i]];
        if *slot != usize::MAX && *slot != img {
            return Err(HomotopyError::NotConstantOnFibres(qp[i], i));
        }
        *slot = img;
    }
    Ok(PtMap::new(pair, sm.space().clone(), a)?)
}

/// The path space, cocones and loop space, by kernels and by exponentials.
#[derive(Clone, Debug)]
pub struct PathSpaces {
    /// `PX = X^(J_•)`.
    pub path: ExpSpace,
    /// `E^α X = Ker(∂^α : PX -> X)` for `α = -, +`.
    pub cocone_kernels: [PtSpace; 2],
    /// `E^α X = X^(J_α)`.
    pub cocone_exponentials: [ExpSpace; 2],
    /// `ΩX = Ker(∂⁻ : E⁺X -> X)`.
    pub loop_kernel: PtSpace,
    /// `ΩX = X^(S¹)`.
    pub loop_exponential: ExpSpace,
    /// Restrictions identifying kernel and exponential forms: the two
    /// cocones, then the loops.
    pub comparisons: [PtMap; 3],
}

impl PathSpaces {
    pub fn forms_agree(&self) -> bool {
        self.comparisons.iter().all(|c| c.is_homeomorphism())
    }
}

fn evaluation_at(e: &ExpSpace, dom: &PtSpace, cod: &PtSpace, point: usize) -> Result<PtMap, HomotopyError> {
    let a = (0..e.len()).map(|i| e.map(i)[point]).collect();
    Ok(PtMap::new(dom.clone(), cod.clone(), a)?)
}

pub fn paths_loops(x: &PtSpace, m: &IntervalModel) -> Result<PathSpaces, HomotopyError> {
    let jb = m.pointed_interval();
    let path = pointed_exponential(&jb, x);
    let px = path.pointed().unwrap();
    let mut kernels = Vec::new();
    let mut exps = Vec::new();
    let mut cmps = Vec::new();
    let mut plus_kernel = None;
    for side in [Side::Minus, Side::Plus] {
        let d = evaluation_at(&path, &px, x, m.end(side))?;
        let (ker, inc) = kernel(&d);
        let e = pointed_exponential(&m.pointed_at(side), x);
        let a = (0..ker.len())
            .map(|i| {
                let f = &path.map(inc.apply(i))[..m.space().len()];
                e.index_of(f).ok_or_else(|| ExpoError::NotInCarrier(f.to_vec()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        cmps.push(PtMap::new(ker.clone(), e.pointed().unwrap(), a)?);
        if side == Side::Plus {
            plus_kernel = Some((ker.clone(), inc));
        }
        kernels.push(ker);
        exps.push(e);
    }
    let (eplus, eplus_inc) = plus_kernel.unwrap();
    let at_minus = (0..eplus.len())
        .map(|i| path.map(eplus_inc.apply(i))[m.minus])
        .collect();
    let d = PtMap::new(eplus.clone(), x.clone(), at_minus)?;
    let (omega, omega_inc) = kernel(&d);
    let le = pointed_exponential(m.circle(), x);
    let a = (0..omega.len())
        .map(|i| {
            let f = path.map(eplus_inc.apply(omega_inc.apply(i)));
            let mut l = vec![usize::MAX; m.circle().len()];
            for (j, &c) in m.circle_projection().iter().enumerate() {
                l[c] = f[j];
            }
            le.index_of(&l).ok_or(ExpoError::NotInCarrier(l))
        })
        .collect::<Result<Vec<_>, _>>()?;
    cmps.push(PtMap::new(omega.clone(), le.pointed().unwrap(), a)?);
    let [k0, k1]: [PtSpace; 2] = kernels.try_into().unwrap();
    let [e0, e1]: [ExpSpace; 2] = exps.try_into().unwrap();
    let [c0, c1, c2]: [PtMap; 3] = cmps.try_into().unwrap();
    Ok(PathSpaces {
        path,
        cocone_kernels: [k0, k1],
        cocone_exponentials: [e0, e1],
        loop_kernel: omega,
        loop_exponential: le,
        comparisons: [c0, c1, c2],
    })
}

/// The smash factors of the left adjoints `I, C⁻, C⁺, Σ`, named.
pub fn left_adjoint_factors(m: &IntervalModel) -> [(&'static str, PtSpace); 4] {
    [
        ("I", m.pointed_interval()),
        ("C-", m.pointed_at(Side::Minus)),
        ("C+", m.pointed_at(Side::Plus)),
        ("Sigma", m.circle().clone()),
    ]
}

/// Hom-set counts and round trips for `I ⊣ P`, `C⁻ ⊣ E⁻`, `C⁺ ⊣ E⁺` and
/// `Σ ⊣ Ω` between `x` and `y`.
pub fn adjunction_reports(
    x: &PtSpace,
    y: &PtSpace,
    m: &IntervalModel,
) -> Result<Vec<(&'static str, AdjunctionReport)>, HomotopyError> {
    left_adjoint_factors(m)
        .into_iter()
        .map(|(name, a)| Ok((name, Adjunction::new(x, &a, y).check()?)))
        .collect()
}

/// `(X ∧ A) ∧ B -> (X ∧ B) ∧ A`, `(x∧a)∧b ↦ (x∧b)∧a`: the two endofunctors
/// `- ∧ A` and `- ∧ B` commute at `X` when this is a homeomorphism.
pub fn commute_smash_factors(x: &PtSpace, a: &PtSpace, b: &PtSpace) -> Result<PtMap, HomotopyError> {
    let cache = SmashCache::default();
    let t = ParenTree::left3();
    let from = cache.tree_smash(&t, &[x.clone(), a.clone(), b.clone()]);
    let to = cache.tree_smash(&t, &[x.clone(), b.clone(), a.clone()]);
    let f = (0..from.space().len())
        .map(|p| match from.leaf_tuple(p) {
            None => to.space().base(),
            Some(c) => to.eval(&[c[0], c[2], c[1]]),
        })
        .collect();
    Ok(PtMap::new(from.space().clone(), to.space().clone(), f)?)
}

/// `(X^A)^B ≅ (X^B)^A`: the right adjoints `(-)^A` and `(-)^B` commute at
/// `X`.
pub fn exponents_commute(x: &PtSpace, a: &PtSpace, b: &PtSpace) -> bool {
    crate::expo::check_pointed_exp_isos(x, a, b).commute
}

/// `X ∧ (J_•)^∧n -> X ∧ (Jⁿ)_•`, the iterated cylinder against the cube.
pub fn iterated_cylinder_comparison(x: &PtSpace, m: &IntervalModel, n: usize) -> Result<PtMap, HomotopyError> {
    let jb = m.pointed_interval();
    let cube = Product::new(&vec![m.space().clone(); n]);
    let cube_b = add_basepoint(cube.space());
    let power = nary_smash(&vec![jb; n]);
    let lhs = smash(x, power.space());
    let rhs = smash(x, &cube_b);
    let a = (0..lhs.space().len())
        .map(|p| match lhs.representative(p) {
            None => rhs.space().base(),
            Some(c) => {
                let js = power.representative(c[1]).unwrap();
                rhs.eta(&[c[0], cube.encode(&js)])
            }
        })
        .collect();
    Ok(PtMap::new(lhs.space().clone(), rhs.space().clone(), a)?)
}
