import init, { generate, solve, recognize } from "./pkg/rlpart_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

// Two shades per side so the two parts of each side are distinguishable.
const PART_COLOURS = {
  independent: ["#3b6fd4", "#8fb0ee"],
  clique: ["#e08a1e", "#f3c27e"],
};
const DELETED = "#d43b3b";

function parseGraph(text) {
  const lines = text.split("\n").map((l) => l.trim()).filter((l) => l && !l.startsWith("#"));
  if (lines.length === 0) return { n: 0, edges: [] };
  const [n] = lines[0].split(/\s+/).map(Number);
  const edges = lines.slice(1).map((l) => l.split(/\s+/).map(Number));
  return { n, edges };
}

function draw(report) {
  const canvas = $("canvas");
  const ctx = canvas.getContext("2d");
  const { n, edges } = parseGraph($("graph").value);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!n) return;

  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  const radius = Math.min(cx, cy) - 30;
  const pos = [];
  for (let v = 0; v < n; v++) {
    const a = (2 * Math.PI * v) / n - Math.PI / 2;
    pos.push([cx + radius * Math.cos(a), cy + radius * Math.sin(a)]);
  }

  const colour = new Array(n).fill("#999");
  const deletedEdges = new Set();
  if (report && report.witness) {
    report.witness.independent_parts.forEach((part, i) => part.forEach((v) => (colour[v] = PART_COLOURS.independent[i % 2])));
    report.witness.clique_parts.forEach((part, i) => part.forEach((v) => (colour[v] = PART_COLOURS.clique[i % 2])));
    for (const d of report.deleted) {
      if (Array.isArray(d)) deletedEdges.add(`${d[0]},${d[1]}`);
      else colour[d] = DELETED;
    }
  }

  for (const [u, v] of edges) {
    const gone = deletedEdges.has(`${Math.min(u, v)},${Math.max(u, v)}`);
    ctx.strokeStyle = gone ? DELETED : "#bbb";
    ctx.setLineDash(gone ? [5, 4] : []);
    ctx.lineWidth = gone ? 2 : 1;
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.setLineDash([]);

  const r = n > 30 ? 7 : 11;
  ctx.font = `${n > 30 ? 9 : 11}px system-ui`;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  for (let v = 0; v < n; v++) {
    ctx.fillStyle = colour[v];
    ctx.beginPath();
    ctx.arc(...pos[v], r, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillStyle = "#fff";
    ctx.fillText(String(v), ...pos[v]);
  }
}

function show(json) {
  const report = JSON.parse(json);
  $("out").textContent = JSON.stringify(report, null, 2);
  draw(report.error ? null : report);
}

// Let the button state repaint before a long solve blocks the page.
function later(f) {
  $("out").textContent = "Working…";
  setTimeout(f, 20);
}

async function main() {
  await init();

  $("generate").onclick = () => {
    const res = JSON.parse(generate(num("seed"), num("n"), num("r"), num("l"), num("plant"), num("p")));
    if (res.error) {
      $("out").textContent = res.error;
      return;
    }
    $("graph").value = res.edge_list;
    $("k").value = res.planted_k;
    $("out").textContent = `generated n = ${res.n}, m = ${res.m}, planted k = ${res.planted_k}`;
    draw(null);
  };
  $("solve").onclick = () =>
    later(() => show(solve($("graph").value, $("mode").value, num("r"), num("l"), num("k"), $("any").checked)));
  $("recognize").onclick = () => later(() => show(recognize($("graph").value, num("r"), num("l"))));
  $("graph").oninput = () => draw(null);

  $("generate").onclick();
}

main();
