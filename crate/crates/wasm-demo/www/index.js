import init, { explore, fundamental, theorems } from "./pkg/hyperring_wasm_demo.js";

const $ = (id) => document.getElementById(id);
const out = $("output");
const status = $("status");

function params() {
  return [Number($("n").value), $("a").value];
}

function set(s) {
  return "{" + s.join(",") + "}";
}

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function grid(title, size, cell) {
  const t = el("table");
  const head = t.insertRow();
  head.appendChild(el("th", title));
  for (let b = 0; b < size; b++) head.appendChild(el("th", b));
  for (let a = 0; a < size; a++) {
    const row = t.insertRow();
    row.appendChild(el("th", a));
    for (let b = 0; b < size; b++) row.insertCell().textContent = cell(a, b);
  }
  return t;
}

function tables(t) {
  const d = el("div");
  d.appendChild(grid("o", t.size, (a, b) => set(t.hmul[a][b])));
  return d;
}

function run(f) {
  out.replaceChildren();
  status.replaceChildren();
  try {
    f();
  } catch (e) {
    status.appendChild(el("p", String(e), "error"));
  }
}

$("explore").onclick = () => run(() => {
  const [n, a] = params();
  const v = JSON.parse(explore(n, a, $("strict").checked));
  const r = v.report;
  const flags = Object.entries(r.ring_flags).filter(([, on]) => on).map(([k]) => k);
  status.appendChild(el("p", `${r.ring}: identity ${r.identity ?? "none"}, r(0) = ${set(r.rad0)}, ` +
    `${flags.join(", ") || "no ring flags"}` + (v.standing ? "" : "; not every hyperideal is a C-hyperideal")));
  const cols = ["prime", "primary", "maximal", "minimal_nonzero", "essential", "c_ideal", "r_ideal", "n_ideal"];
  const t = el("table");
  const head = t.insertRow();
  for (const c of ["hyperideal", "radical", ...cols]) head.appendChild(el("th", c));
  for (const e of r.ideals) {
    const row = t.insertRow();
    row.insertCell().textContent = set(e.members);
    row.insertCell().textContent = set(e.radical);
    for (const c of cols) {
      const cell = row.insertCell();
      cell.textContent = e[c] ? "yes" : "";
      if (e[c]) cell.className = "yes";
    }
  }
  out.append(t, tables(v.tables));
});

$("fundamental").onclick = () => run(() => {
  const [n, a] = params();
  const v = JSON.parse(fundamental(n, a));
  status.appendChild(el("p", "classes: " + v.classes.map(set).join(" ")));
  const r = v.ring;
  out.append(
    grid("+", r.size, (x, y) => r.add[x][y]),
    grid("·", r.size, (x, y) => r.hmul[x][y][0]),
  );
});

$("theorems").onclick = () => run(() => {
  const [n, a] = params();
  status.appendChild(el("p", "running…"));
  setTimeout(() => run(() => out.appendChild(el("pre", theorems(n, a, $("only").value)))), 0);
});

await init();
