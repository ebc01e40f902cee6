import init, { translate, prove, countermodel } from "./pkg/dnc_wasm.js";

const $ = (id) => document.getElementById(id);

function show(id, text, error) {
  const out = $(id);
  out.textContent = text;
  out.className = error ? "error" : "";
}

function run(id, call, render) {
  const reply = JSON.parse(call());
  if (reply.error) show(id, reply.error, true);
  else show(id, render(reply), false);
}

function renderProof(r) {
  const head = `${r.verdict}: ${r.sequent}\n\n`;
  if (r.tree) return head + r.tree;
  if (r.valuation) return head + "falsifying valuation\n" + JSON.stringify(r.valuation, null, 2);
  if (r.model) return head + "Kripke countermodel\n" + JSON.stringify(r.model, null, 2);
  return head + "no derivation within the search bounds";
}

await init();

$("tr-go").onclick = () =>
  run("tr-out", () => translate($("tr-method").value, $("tr-formula").value), (r) => r.formula);

$("pr-go").onclick = () => {
  show("pr-out", "searching...", false);
  // let the message paint before the search blocks the thread
  setTimeout(() =>
    run("pr-out", () => prove($("pr-logic").value, $("pr-sequent").value, Number($("pr-depth").value)), renderProof), 0);
};

$("cm-go").onclick = () =>
  run("cm-out", () => countermodel($("cm-formula").value, Number($("cm-worlds").value)),
    (r) => (r.model ? JSON.stringify(r.model, null, 2) : "no countermodel of that size"));
