import init, { a_grid, xi_curves, evaluate_point, perp_variance_profile, max_n } from "./pkg/dicke_squeeze_web.js";

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];
const PAD = { left: 50, right: 110, top: 15, bottom: 35 };

const $ = (id) => document.getElementById(id);

function frame(ctx, w, h, xr, yr, xlabel, ylabel) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#000";
  ctx.fillStyle = "#000";
  ctx.font = "12px sans-serif";
  const pw = w - PAD.left - PAD.right;
  const ph = h - PAD.top - PAD.bottom;
  ctx.strokeRect(PAD.left, PAD.top, pw, ph);
  const px = (x) => PAD.left + ((x - xr[0]) / (xr[1] - xr[0])) * pw;
  const py = (y) => PAD.top + (1 - (y - yr[0]) / (yr[1] - yr[0])) * ph;
  ctx.textAlign = "center";
  for (let i = 0; i <= 5; i++) {
    const x = xr[0] + ((xr[1] - xr[0]) * i) / 5;
    ctx.fillText(x.toFixed(2), px(x), h - PAD.bottom + 15);
  }
  ctx.fillText(xlabel, PAD.left + pw / 2, h - 4);
  ctx.textAlign = "right";
  for (let i = 0; i <= 4; i++) {
    const y = yr[0] + ((yr[1] - yr[0]) * i) / 4;
    ctx.fillText(y.toPrecision(3), PAD.left - 5, py(y) + 4);
  }
  ctx.save();
  ctx.translate(12, PAD.top + ph / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.textAlign = "center";
  ctx.fillText(ylabel, 0, 0);
  ctx.restore();
  return { px, py, pw };
}

function polyline(ctx, xs, ys, px, py, color) {
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.8;
  let open = false;
  ctx.beginPath();
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(ys[i])) {
      open = false;
      continue;
    }
    if (open) ctx.lineTo(px(xs[i]), py(ys[i]));
    else ctx.moveTo(px(xs[i]), py(ys[i]));
    open = true;
  }
  ctx.stroke();
  ctx.lineWidth = 1;
}

function plotCurves() {
  $("curve-error").textContent = "";
  const n = Number($("curve-n").value);
  const ks = $("curve-ks").value.split(",").map((s) => Number(s.trim())).filter((k) => Number.isInteger(k));
  const steps = Number($("curve-steps").value);
  const canvas = $("curve-canvas");
  const ctx = canvas.getContext("2d");
  let xs, values;
  try {
    xs = a_grid(0, 0.995, steps);
    values = xi_curves(n, Uint32Array.from(ks), 0, 0.995, steps);
  } catch (e) {
    $("curve-error").textContent = String(e.message || e);
    return;
  }
  const finite = values.filter(Number.isFinite);
  const ymax = Math.max(1.1, ...finite) * 1.05;
  const { px, py, pw } = frame(ctx, canvas.width, canvas.height, [0, 1], [0, ymax], "a", "xi");

  ctx.setLineDash([6, 4]);
  ctx.strokeStyle = "#777";
  ctx.beginPath();
  ctx.moveTo(px(0), py(1));
  ctx.lineTo(px(1), py(1));
  ctx.stroke();
  ctx.setLineDash([]);

  ks.forEach((k, i) => {
    const ys = values.slice(i * steps, (i + 1) * steps);
    const color = COLORS[i % COLORS.length];
    polyline(ctx, xs, ys, px, py, color);
    // undefined points sit on the axis as open circles
    ys.forEach((y, j) => {
      if (!Number.isFinite(y)) {
        ctx.beginPath();
        ctx.arc(px(xs[j]), py(0), 4, 0, 2 * Math.PI);
        ctx.stroke();
      }
    });
    ctx.fillStyle = color;
    ctx.textAlign = "left";
    ctx.fillText(`k = ${k}`, PAD.left + pw + 15, PAD.top + 15 + 18 * i);
  });
}

function bars(canvas, pops) {
  const ctx = canvas.getContext("2d");
  const ymax = Math.max(...pops) * 1.1 || 1;
  const { px, py } = frame(ctx, canvas.width, canvas.height, [-0.5, pops.length - 0.5], [0, ymax], "excitations j", "population");
  ctx.fillStyle = "#1f77b4";
  const w = Math.max(1, (px(1) - px(0)) * 0.8);
  pops.forEach((p, j) => ctx.fillRect(px(j) - w / 2, py(p), w, py(0) - py(p)));
}

function evaluate() {
  $("point-error").textContent = "";
  const n = Number($("point-n").value);
  const k = Number($("point-k").value);
  const a = Number($("point-a").value);
  let view, profile;
  try {
    view = evaluate_point(n, k, a);
    profile = perp_variance_profile(n, k, a, 720);
  } catch (e) {
    $("point-error").textContent = String(e.message || e);
    return;
  }
  const fmt = (x) => (Number.isFinite(x) ? x.toPrecision(12) : "undefined");
  const rows = [
    ["<Sx>", fmt(view.sx)],
    ["<Sz>", fmt(view.sz)],
    ["min perpendicular variance", fmt(view.perp_var)],
    ["xi (closed form)", fmt(view.xi)],
    ["xi (Dicke-basis oracle)", fmt(view.xi_oracle)],
    ["verdict", view.verdict],
  ];
  $("point-report").innerHTML = rows.map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`).join("");
  bars($("pop-canvas"), Array.from(view.populations));
  view.free();

  const canvas = $("profile-canvas");
  const ctx = canvas.getContext("2d");
  if (profile.length === 0) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.fillStyle = "#000";
    ctx.fillText("mean spin is a null vector: no perpendicular plane", PAD.left, 40);
    return;
  }
  const phis = Array.from(profile, (_, j) => (Math.PI * j) / (profile.length - 1));
  const ymax = Math.max(...profile, n / 4) * 1.05;
  const { px, py } = frame(ctx, canvas.width, canvas.height, [0, Math.PI], [0, ymax], "phi (rad) from n1 towards n2", "variance");
  ctx.setLineDash([6, 4]);
  ctx.strokeStyle = "#777";
  ctx.beginPath();
  ctx.moveTo(px(0), py(n / 4));
  ctx.lineTo(px(Math.PI), py(n / 4));
  ctx.stroke();
  ctx.setLineDash([]);
  polyline(ctx, phis, profile, px, py, "#d62728");
}

await init();
$("curve-n").max = $("point-n").max = String(max_n());
$("curve-run").addEventListener("click", plotCurves);
$("point-run").addEventListener("click", evaluate);
plotCurves();
evaluate();
