import init, { bundledConfig, sweepSvg, exportQasm, oracleCompare } from "./pkg/kgsim_web.js";

const form = document.getElementById("knobs");
const status = document.getElementById("status");
const heatmap = document.getElementById("heatmap");
const text = document.getElementById("text");

function currentConfig() {
  const f = new FormData(form);
  const config = JSON.parse(bundledConfig(f.get("case")));
  const v0 = Number(f.get("v0"));
  config.trotter_steps = Number(f.get("r"));
  config.kinetic_applications = Number(f.get("kapp"));
  config.splitting = f.get("splitting");
  if (f.get("preset") === "sigma-z-barrier") {
    config.potential = { preset: "sigma-z-barrier", v0 };
  } else {
    const sites = new Array(1 << config.num_qubits).fill(0);
    sites[config.barrier_site] = v0;
    config.potential = { preset: "explicit-sites", site_values: sites };
  }
  return config;
}

function run(action) {
  status.textContent = "";
  status.className = "";
  try {
    const started = performance.now();
    action(JSON.stringify(currentConfig()), new FormData(form));
    status.textContent = `done in ${(performance.now() - started).toFixed(1)} ms`;
  } catch (e) {
    status.textContent = String(e.message ?? e);
    status.className = "error";
  }
}

function showText(body) {
  text.textContent = body;
  text.hidden = false;
}

function onCaseChange() {
  const config = JSON.parse(bundledConfig(form.elements["case"].value));
  form.elements["r"].value = config.trotter_steps;
  form.elements["t"].value = config.times[config.times.length - 1];
}

const sweep = (json) => { heatmap.innerHTML = sweepSvg(json); };

await init();
form.elements["case"].addEventListener("change", () => { onCaseChange(); run(sweep); });
document.getElementById("run-sweep").addEventListener("click", () => run(sweep));
document.getElementById("run-qasm").addEventListener("click", () =>
  run((json, f) => showText(exportQasm(json, Number(f.get("t")), Number(f.get("r"))))));
document.getElementById("run-oracle").addEventListener("click", () =>
  run((json, f) => {
    const steps = Uint32Array.from(String(f.get("rlist")).split(",").map((s) => Number(s.trim())));
    showText(oracleCompare(json, Number(f.get("t")), steps));
  }));

onCaseChange();
run(sweep);
