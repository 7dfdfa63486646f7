// Distance histogram: bin the reported displacement distances and mark
// where the expected mean (2/epsilon) falls. All layout math is pure so
// the binning and marker position are unit-testable.

export interface HistogramLayout {
  binEdges: number[];
  counts: number[];
  maxCount: number;
  /** index i such that edges[i] <= expectedMean < edges[i+1], clamped */
  meanBin: number;
  expectedMeanM: number;
}

export function binDistances(
  distances: number[],
  expectedMeanM: number,
  bins = 24,
): HistogramLayout {
  if (bins < 1) throw new RangeError('bins must be >= 1');
  // keep the mean marker inside the plot even when the sample is tight
  const top = Math.max(
    distances.reduce((a, b) => Math.max(a, b), 0),
    expectedMeanM * 1.25,
    1e-9,
  );
  const width = top / bins;
  const edges: number[] = [];
  for (let i = 0; i <= bins; i++) edges.push(i * width);
  const counts = new Array<number>(bins).fill(0);
  for (const d of distances) {
    let k = Math.floor(d / width);
    if (k >= bins) k = bins - 1;
    if (k < 0) k = 0;
    counts[k] += 1;
  }
  let meanBin = Math.floor(expectedMeanM / width);
  if (meanBin >= bins) meanBin = bins - 1;
  return {
    binEdges: edges,
    counts,
    maxCount: counts.reduce((a, b) => Math.max(a, b), 0),
    meanBin,
    expectedMeanM,
  };
}

function fmt(v: number): string {
  return v.toFixed(1);
}

/** Render the histogram panel as an SVG string. */
export function renderHistogramSvg(
  layout: HistogramLayout,
  width: number,
  height: number,
): string {
  const padL = 8;
  const padB = 18;
  const padT = 8;
  const plotW = width - 2 * padL;
  const plotH = height - padT - padB;
  const bins = layout.counts.length;
  const top = layout.binEdges[layout.binEdges.length - 1];
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}" role="img">`,
  );
  const denom = Math.max(layout.maxCount, 1);
  for (let i = 0; i < bins; i++) {
    const h = (layout.counts[i] / denom) * plotH;
    const x = padL + (i / bins) * plotW;
    const w = plotW / bins;
    parts.push(
      `<rect class="bar" x="${fmt(x)}" y="${fmt(padT + plotH - h)}" ` +
        `width="${fmt(Math.max(w - 1, 0.5))}" height="${fmt(h)}"/>`,
    );
  }
  const meanX = padL + (layout.expectedMeanM / top) * plotW;
  parts.push(
    `<line class="mean-marker" x1="${fmt(meanX)}" y1="${padT}" ` +
      `x2="${fmt(meanX)}" y2="${padT + plotH}" data-mean-m="${layout.expectedMeanM}"/>`,
  );
  parts.push(
    `<text class="mean-label" x="${fmt(meanX + 4)}" y="${padT + 12}">` +
      `${Math.round(layout.expectedMeanM)} m</text>`,
  );
  const axisY = padT + plotH;
  parts.push(
    `<line class="axis" x1="${padL}" y1="${fmt(axisY)}" x2="${padL + plotW}" y2="${fmt(axisY)}"/>`,
  );
  parts.push(`<text class="tick" x="${padL}" y="${height - 4}">0</text>`);
  parts.push(
    `<text class="tick" x="${padL + plotW}" y="${height - 4}" text-anchor="end">` +
      `${Math.round(top)} m</text>`,
  );
  parts.push('</svg>');
  return parts.join('');
}
