// Bundled demo scenes: the five degenerate configurations worth dragging
// through: orthogonal bisector, tangential circles, von-Staudt sum, and the
// unification of circles with free and with line-bound centers.

import { ConstructionDocument } from "./protocol.js";

export interface DemoScene {
  name: string;
  title: string;
  hint: string;
  document: ConstructionDocument;
  worldWidth: number;
  worldCenter: [number, number];
}

export const ORTHO_BISECTOR: DemoScene = {
  name: "ortho-bisector",
  title: "Orthogonal bisector",
  hint: "Drag B. At distance 2 the circle intersections merge; the bisector line survives.",
  worldWidth: 8,
  worldCenter: [1, 0],
  document: {
    elements: [
      { id: "A", kind: "FixedPoint", literal: [0, 0, 1] },
      { id: "B", kind: "FreePoint", literal: [1.5, 0, 1] },
      { id: "CA", kind: "Circle", args: ["A"], radius: 1.0 },
      { id: "CB", kind: "Circle", args: ["B"], radius: 1.0 },
      { id: "p1", kind: "CircleCircleIntersect", args: ["CA", "CB"], branch: 1 },
      { id: "p2", kind: "CircleCircleIntersect", args: ["CA", "CB"], branch: 2 },
      { id: "bisector", kind: "LineJoin", args: ["p1", "p2"] },
    ],
  },
};

export const TANGENT_CIRCLES: DemoScene = {
  name: "tangent-circles",
  title: "Tangential circles",
  hint: "Drag the center of D across x = 2: the connecting line resolves at tangency.",
  worldWidth: 8,
  worldCenter: [1, 0],
  document: {
    elements: [
      { id: "MC", kind: "FixedPoint", literal: [0, 0, 1] },
      { id: "MD", kind: "FreePoint", literal: [2.5, 0, 1] },
      { id: "C", kind: "Circle", args: ["MC"], radius: 1.0 },
      { id: "D", kind: "Circle", args: ["MD"], radius: 1.0 },
      { id: "p1", kind: "CircleCircleIntersect", args: ["C", "D"], branch: 1 },
      { id: "p2", kind: "CircleCircleIntersect", args: ["C", "D"], branch: 2 },
      { id: "j", kind: "LineJoin", args: ["p1", "p2"] },
    ],
  },
};

export const VON_STAUDT: DemoScene = {
  name: "von-staudt",
  title: "Von-Staudt sum",
  hint: "Drag E onto F (or down onto the base line): m and x+y stay drawn via resolution.",
  worldWidth: 12,
  worldCenter: [3.5, 1.5],
  document: {
    elements: [
      { id: "zero", kind: "FixedPoint", literal: [0, 0, 1] },
      { id: "inf", kind: "FixedPoint", literal: [1, 0, 0] },
      { id: "x", kind: "FixedPoint", literal: [2, 0, 1] },
      { id: "y", kind: "FixedPoint", literal: [4, 0, 1] },
      { id: "E", kind: "FreePoint", literal: [2, 2, 1] },
      { id: "jinfE", kind: "LineJoin", args: ["inf", "E"] },
      { id: "F", kind: "SemiFreePointOnLine", args: ["jinfE"], literal: [4, 2, 1] },
      { id: "l", kind: "LineJoin", args: ["zero", "inf"] },
      { id: "j0E", kind: "LineJoin", args: ["zero", "E"] },
      { id: "jyF", kind: "LineJoin", args: ["y", "F"] },
      { id: "G", kind: "PointMeet", args: ["j0E", "jyF"] },
      { id: "jinfG", kind: "LineJoin", args: ["inf", "G"] },
      { id: "jxE", kind: "LineJoin", args: ["x", "E"] },
      { id: "H", kind: "PointMeet", args: ["jinfG", "jxE"] },
      { id: "m", kind: "LineJoin", args: ["F", "H"] },
      { id: "sum", kind: "PointMeet", args: ["l", "m"] },
    ],
  },
};

export const UNIFIED_FREE: DemoScene = {
  name: "unified-free",
  title: "Unified circles (free)",
  hint: "Drag M2 onto M1: with free centers the join is NOT removable and disappears.",
  worldWidth: 8,
  worldCenter: [0.5, 0],
  document: {
    elements: [
      { id: "M1", kind: "FreePoint", literal: [0, 0, 1] },
      { id: "M2", kind: "FreePoint", literal: [1, 0, 1] },
      { id: "C1", kind: "Circle", args: ["M1"], radius: 1.0 },
      { id: "C2", kind: "Circle", args: ["M2"], radius: 1.0 },
      { id: "p1", kind: "CircleCircleIntersect", args: ["C1", "C2"], branch: 1 },
      { id: "p2", kind: "CircleCircleIntersect", args: ["C1", "C2"], branch: 2 },
      { id: "j", kind: "LineJoin", args: ["p1", "p2"] },
    ],
  },
};

export const UNIFIED_ON_LINE: DemoScene = {
  name: "unified-on-line",
  title: "Unified circles (centers on a line)",
  hint: "Centers are bound to the x-axis: merging them keeps a removable, stable join.",
  worldWidth: 8,
  worldCenter: [0.5, 0],
  document: {
    elements: [
      { id: "axis", kind: "FixedLine", literal: [0, 1, 0] },
      { id: "M1", kind: "SemiFreePointOnLine", args: ["axis"], literal: [0, 0, 1] },
      { id: "M2", kind: "SemiFreePointOnLine", args: ["axis"], literal: [1, 0, 1] },
      { id: "C1", kind: "Circle", args: ["M1"], radius: 1.0 },
      { id: "C2", kind: "Circle", args: ["M2"], radius: 1.0 },
      { id: "p1", kind: "CircleCircleIntersect", args: ["C1", "C2"], branch: 1 },
      { id: "p2", kind: "CircleCircleIntersect", args: ["C1", "C2"], branch: 2 },
      { id: "j", kind: "LineJoin", args: ["p1", "p2"] },
    ],
  },
};

export const DEMO_SCENES: DemoScene[] = [
  ORTHO_BISECTOR,
  TANGENT_CIRCLES,
  VON_STAUDT,
  UNIFIED_FREE,
  UNIFIED_ON_LINE,
];
