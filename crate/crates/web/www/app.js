import init, { graphSvg, parallelogramSvg, wordSvg } from "./pkg/christoffel_web.js";

const $ = (id) => document.getElementById(id);

function show(target, f) {
  const out = $(target);
  try {
    out.className = "out";
    out.innerHTML = f();
  } catch (e) {
    out.className = "out err";
    out.textContent = String(e);
  }
}

function drawGraph() {
  show("g-out", () =>
    graphSvg($("g-a").value, $("g-w").value, $("g-flip").checked, Number($("g-r").value)));
}

function drawParallelogram() {
  show("p-out", () => parallelogramSvg($("p-a").value));
}

function drawWord() {
  show("w-out", () => {
    const text = wordSvg(Number($("w-p").value), Number($("w-q").value));
    const [word, central] = text.split("\n", 2);
    const svg = text.slice(word.length + central.length + 2);
    const esc = (s) => s.replace(/[&<>]/g, (c) => `&#${c.charCodeAt(0)};`);
    return `<p>w = <code>${esc(word)}</code><br>central factor = <code>${esc(central)}</code></p>${svg}`;
  });
}

await init();
$("g-go").onclick = drawGraph;
$("g-flip").onchange = drawGraph;
$("p-go").onclick = drawParallelogram;
$("w-go").onclick = drawWord;
drawGraph();
drawParallelogram();
drawWord();
