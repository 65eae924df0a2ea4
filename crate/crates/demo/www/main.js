import init, { analyze, burn, witness } from "./pkg/burnhom_demo.js";

const $ = (id) => document.getElementById(id);
let current = null;

function show(el, text, isError = false) {
  el.textContent = text;
  el.classList.toggle("error", isError);
}

function call(fn, ...args) {
  try {
    return { value: JSON.parse(fn(...args)) };
  } catch (e) {
    return { error: e.message ?? String(e) };
  }
}

function positions(n, width, height) {
  const r = Math.min(width, height) / 2 - 30;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [width / 2 + r * Math.cos(a), height / 2 + r * Math.sin(a)];
  });
}

function draw(result, step) {
  const canvas = $("canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = positions(result.vertex_count, canvas.width, canvas.height);
  const burned = new Set(result.steps[step - 1] ?? []);
  const sources = new Set(result.sources.slice(0, step));
  ctx.strokeStyle = "#888";
  for (const [u, v] of result.edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  pos.forEach(([x, y], v) => {
    ctx.beginPath();
    ctx.arc(x, y, 16, 0, 2 * Math.PI);
    ctx.fillStyle = burned.has(v) ? "#f08030" : "#e8e8e8";
    ctx.fill();
    ctx.lineWidth = sources.has(v) ? 4 : 1;
    ctx.strokeStyle = sources.has(v) ? "#a02000" : "#555";
    ctx.stroke();
    ctx.lineWidth = 1;
    ctx.fillStyle = "#000";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(v), x, y);
    if (result.valid) {
      ctx.fillStyle = "#333";
      ctx.fillText(`t=${result.lambda[v]}`, x, y + 26);
    }
  });
  $("step-label").textContent = `step ${step} of ${result.steps.length}`;
}

function runAnalyze() {
  const { value, error } = call(analyze, $("graph").value);
  if (error) return show($("analysis"), error, true);
  const lines = [
    `vertices: ${value.vertex_count}, edges: ${value.edges.length}`,
    `connected: ${value.connected}, tree: ${value.tree}, bipartite: ${value.bipartite}`,
    `burnings: ${value.burning_count} (${value.homomorphic_burnings} homomorphic)`,
    `burning number: ${value.burning_number}`,
    `configuration space facets: ${value.facets.map((f) => `{${f.join(",")}}`).join(" ")}`,
    ...value.homology.map((h, q) => `H_${q} = ${h}`),
  ];
  show($("analysis"), lines.join("\n"));
}

function runBurn() {
  const { value, error } = call(burn, $("graph").value, $("sources").value);
  if (error) return show($("burning"), error, true);
  current = value;
  const slider = $("step");
  slider.max = value.steps.length;
  slider.value = value.steps.length;
  draw(value, value.steps.length);
  const text = value.valid
    ? `valid\nend time: ${value.end_time}\ntimes: ${value.lambda.join(" ")}\nhomomorphism: ${value.is_homomorphism ? "yes" : "no"}`
    : `invalid: ${value.error}`;
  show($("burning"), text, !value.valid);
}

function runWitness() {
  const { value, error } = call(witness, $("kind").value, Number($("param").value));
  if (error) return show($("witness-out"), error, true);
  const strip = value.lambda.map((t, v) => (value.sources.includes(v) ? `[${t}]` : ` ${t} `)).join("-");
  show(
    $("witness-out"),
    `path on ${value.n} vertices, sources ${value.sources.join(",")}, end time ${value.end_time}\n` +
      `${strip}\nhomomorphism: ${value.is_homomorphism ? "yes" : "no"}, ` +
      `${value.closed_form ? "closed-form sequence" : "found by search"}`,
  );
}

await init();
$("analyze").addEventListener("click", runAnalyze);
$("burn").addEventListener("click", runBurn);
$("witness").addEventListener("click", runWitness);
$("step").addEventListener("input", (e) => current && draw(current, Number(e.target.value)));
runAnalyze();
runBurn();
