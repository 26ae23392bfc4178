/** localStorage helpers; every access is guarded because storage may be
 * unavailable (private browsing, disabled, quota). */

const PREFIX = "atlas-forge:";

export function loadString(key: string): string | null {
  try {
    return localStorage.getItem(PREFIX + key);
  } catch {
    return null;
  }
}

export function saveString(key: string, value: string): void {
  try {
    localStorage.setItem(PREFIX + key, value);
  } catch {
    // storage unavailable -- exploration state simply won't persist
  }
}

export function removeKey(key: string): void {
  try {
    localStorage.removeItem(PREFIX + key);
  } catch {
    // ignore
  }
}

export function loadJson<T>(key: string, fallback: T): T {
  const raw = loadString(key);
  if (raw === null) return fallback;
  try {
    return JSON.parse(raw) as T;
  } catch {
    return fallback;
  }
}

export function saveJson(key: string, value: unknown): void {
  saveString(key, JSON.stringify(value));
}
