/**
 * Spelled-letter entry: capitals call out diacritic letters, lowercase
 * letters stand for themselves, an empty token pauses between words.
 * Mirrors the service's decoder so the preview shows exactly what will be
 * submitted.
 */

const CAPITALS: Record<string, string> = {
  A: "ā", // ā
  I: "ī", // ī
  U: "ū", // ū
  F: "ṛ", // ṛ
  G: "ṅ", // ṅ
  Y: "ñ", // ñ
  T: "ṭ", // ṭ
  D: "ḍ", // ḍ
  N: "ṇ", // ṇ
  S: "ś", // ś
  Z: "ṣ", // ṣ
  H: "ḥ", // ḥ
  M: "ṁ", // ṁ
};

export class SpelledTokenError extends Error {}

export function decodeSpelled(tokens: string[]): string {
  const words: string[] = [];
  let current = "";
  for (const raw of tokens) {
    const token = raw.trim();
    if (token === "") {
      if (current) {
        words.push(current);
        current = "";
      }
      continue;
    }
    if (token.length !== 1 || !/^[A-Za-z]$/.test(token)) {
      throw new SpelledTokenError(`spelled-letter token must be one ASCII letter, got '${token}'`);
    }
    if (token >= "A" && token <= "Z") {
      const mapped = CAPITALS[token];
      if (mapped === undefined) {
        throw new SpelledTokenError(`capital '${token}' has no spelled-letter mapping`);
      }
      current += mapped;
    } else {
      current += token;
    }
  }
  if (current) words.push(current);
  return words.join(" ");
}

/** One token per line, or comma-separated; blank tokens pause between words. */
export function parseSpelledStream(text: string): string[] {
  const tokens: string[] = [];
  for (const line of text.split("\n")) {
    if (line.includes(",")) {
      for (const part of line.split(",")) tokens.push(part.trim());
    } else {
      tokens.push(line.trim());
    }
  }
  return tokens;
}
