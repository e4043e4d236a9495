/**
 * Client-side mask-over-anatomy compositing.
 *
 * The pure pixel blend lives here so it can be tested on raw RGBA buffers;
 * the canvas wiring is a thin layer on top and falls back to stacked <img>
 * elements where 2d contexts are unavailable.
 */

export interface Tint {
  r: number;
  g: number;
  b: number;
  /** overlay opacity in [0, 1] applied where the mask is set */
  a: number;
}

export const MASK_TINT: Tint = { r: 255, g: 64, b: 64, a: 0.45 };

/**
 * Alpha-composite a binary mask over a base image. Both buffers are RGBA,
 * length w*h*4; mask pixels with any nonzero channel count as inside.
 * Returns a new buffer; inputs are untouched.
 */
export function compositeMask(
  base: Uint8ClampedArray,
  mask: Uint8ClampedArray,
  tint: Tint = MASK_TINT,
) {
  if (base.length !== mask.length || base.length % 4 !== 0) {
    throw new Error(`buffer sizes disagree: ${base.length} vs ${mask.length}`);
  }
  const out = new Uint8ClampedArray(base);
  for (let p = 0; p < base.length; p += 4) {
    const inside =
      (mask[p] ?? 0) > 0 || (mask[p + 1] ?? 0) > 0 || (mask[p + 2] ?? 0) > 0;
    if (!inside) continue;
    out[p] = (base[p] ?? 0) * (1 - tint.a) + tint.r * tint.a;
    out[p + 1] = (base[p + 1] ?? 0) * (1 - tint.a) + tint.g * tint.a;
    out[p + 2] = (base[p + 2] ?? 0) * (1 - tint.a) + tint.b * tint.a;
    out[p + 3] = 255;
  }
  return out;
}

/**
 * Draw slice + mask composited onto a canvas. Returns false when the
 * environment has no usable 2d context (the caller then stacks images).
 */
export function drawComposite(
  canvas: HTMLCanvasElement,
  slice: HTMLImageElement,
  mask: HTMLImageElement,
  tint: Tint = MASK_TINT,
): boolean {
  const w = slice.naturalWidth;
  const h = slice.naturalHeight;
  if (w === 0 || h === 0) return false;
  const ctx = canvas.getContext("2d");
  if (ctx === null) return false;

  canvas.width = w;
  canvas.height = h;
  ctx.drawImage(slice, 0, 0);
  const baseData = ctx.getImageData(0, 0, w, h);

  ctx.drawImage(mask, 0, 0, w, h);
  const maskData = ctx.getImageData(0, 0, w, h);

  const blended = compositeMask(baseData.data, maskData.data, tint);
  ctx.putImageData(new ImageData(blended, w, h), 0, 0);
  return true;
}
