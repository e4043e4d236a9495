/**
 * Response bodies captured verbatim from a live review-service run against
 * the blob phantom (20 slices, blob on slice 5, default segment params).
 * Tests that check rendered numbers compare against these exact strings,
 * so nothing here may be reformatted.
 */

export const SESSION_ID = "7f1eaa463a0cfbe8b196aa57debdfd5c";

export const SESSION_BODY =
  '{"session_id":"7f1eaa463a0cfbe8b196aa57debdfd5c","slices":20}';

export const SEGMENT_BODY =
  '{"candidates":["/api/v1/sessions/7f1eaa463a0cfbe8b196aa57debdfd5c/slices/5/clusters/0.png",' +
  '"/api/v1/sessions/7f1eaa463a0cfbe8b196aa57debdfd5c/slices/5/clusters/1.png",' +
  '"/api/v1/sessions/7f1eaa463a0cfbe8b196aa57debdfd5c/slices/5/clusters/2.png",' +
  '"/api/v1/sessions/7f1eaa463a0cfbe8b196aa57debdfd5c/slices/5/clusters/3.png",' +
  '"/api/v1/sessions/7f1eaa463a0cfbe8b196aa57debdfd5c/slices/5/clusters/4.png"],' +
  '"centroids":[0.9999999974334605,0.03280918227626512,0.01667566907978284,' +
  '0.024242239276425562,0.007719291176415677],"iterations":71,"converged":true}';

export const SELECT_TUMOR_BODY =
  '{"left":[],"right":[{"area":4,"name":"Primary motor cortex","pixels":144,"fraction":1.0}]}';

export const SELECT_K2_BODY =
  '{"left":[{"area":4,"name":"Primary motor cortex","pixels":135,"fraction":0.05806451612903226}],' +
  '"right":[{"area":4,"name":"Primary motor cortex","pixels":436,"fraction":0.1875268817204301},' +
  '{"area":6,"name":"Premotor and supplementary motor cortex","pixels":333,"fraction":0.1432258064516129}]}';

export const EMPTY_REPORT_BODY = '{"left":[],"right":[]}';

export const ERR_409_BODY = '{"code":"NotSegmented","message":"segment slice 7 first"}';

export const ERR_422_BODY = '{"code":"BadIndex","message":"cluster 9 outside [0, 5)"}';

export function jsonResponse(body: string, status = 200): Response {
  return new Response(body, {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface RecordedCall {
  url: string;
  method: string;
  body: string | null;
}

/**
 * A fetch stub driven by a queue of canned responses. Records every call
 * so tests can assert on URLs and request bodies.
 */
export function stubFetch(responses: Response[]) {
  const calls: RecordedCall[] = [];
  const fetchFn = (url: string, init?: RequestInit): Promise<Response> => {
    let body: string | null = null;
    if (typeof init?.body === "string") body = init.body;
    calls.push({ url, method: init?.method ?? "GET", body });
    const next = responses.shift();
    if (!next) throw new Error(`unexpected fetch: ${url}`);
    return Promise.resolve(next);
  };
  return { fetchFn, calls };
}
