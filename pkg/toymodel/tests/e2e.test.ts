import { execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { describe, expect, it } from "vitest";

import { main } from "../src/cli";
import { FIXTURE_CORPUS, FIXTURE_TABLES_3D } from "./fixture";

const PYTHON = process.env.PYTHON ?? "python3";

function spantag(args: string[], cwd: string): string {
  return execFileSync(PYTHON, ["-m", "spantag", ...args], {
    cwd,
    encoding: "utf-8",
  });
}

function available(): boolean {
  try {
    execFileSync(PYTHON, ["-c", "import spantag"], { encoding: "utf-8" });
    return true;
  } catch {
    return false;
  }
}

describe("end-to-end pipeline through the primary CLI", () => {
  it.skipIf(!available())(
    "train -> predict -> decode -> score reaches F1 >= 0.9 on the fixture",
    () => {
      const started = Date.now();
      const dir = fs.mkdtempSync(path.join(os.tmpdir(), "toymodel-e2e-"));
      const corpus = path.join(dir, "fixture.txt");
      fs.writeFileSync(corpus, FIXTURE_CORPUS);

      const gold = path.join(dir, "gold.tables");
      spantag(["encode", "fixture.txt", "--scheme", "3d", "-o", gold], dir);
      // The embedded copy used by the unit tests must match the real encoder.
      expect(fs.readFileSync(gold, "utf-8")).toBe(FIXTURE_TABLES_3D);

      const model = path.join(dir, "model.bin");
      expect(
        main([
          "train",
          "--corpus", corpus,
          "--tables", gold,
          "--out", model,
          "--scheme", "3d",
          "--epochs", "400",
        ]),
      ).toBe(0);

      const pred = path.join(dir, "pred.tables");
      expect(
        main(["predict", "--model", model, "--corpus", corpus, "--out", pred]),
      ).toBe(0);

      // Overfit predictions reproduce the encoder's tables exactly.
      expect(fs.readFileSync(pred, "utf-8")).toBe(fs.readFileSync(gold, "utf-8"));

      const decoded = path.join(dir, "pred.txt");
      spantag(
        ["decode", pred, "--scheme", "3d", "--corpus", corpus, "-o", decoded],
        dir,
      );
      const report = spantag(
        ["score", decoded, corpus, "--format", "kv"],
        dir,
      );
      const f1Line = report.split("\n").find((line) => line.startsWith("aste.f1="));
      expect(f1Line).toBeDefined();
      const f1 = Number(f1Line!.split("=")[1]);
      expect(f1).toBeGreaterThanOrEqual(0.9);
      expect(Date.now() - started).toBeLessThan(60_000);
    },
    60_000,
  );

  it("rejects a scheme flag that contradicts the trained model", () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), "toymodel-mismatch-"));
    const corpus = path.join(dir, "fixture.txt");
    fs.writeFileSync(corpus, FIXTURE_CORPUS);
    const tables = path.join(dir, "gold.tables");
    // 1d gold tables: train a 1d model without the primary package.
    fs.writeFileSync(tables, "#table s0 9 1d\n1 1 A\n\n#table s1 9 1d\n0 0 O\n\n#table s2 16 1d\n0 0 A\n");
    const model = path.join(dir, "model.bin");
    expect(
      main([
        "train", "--corpus", corpus, "--tables", tables, "--out", model,
        "--scheme", "1d", "--epochs", "1",
      ]),
    ).toBe(0);
    expect(
      main(["predict", "--model", model, "--corpus", corpus, "--out", path.join(dir, "p.tables"), "--scheme", "3d"]),
    ).toBe(1);
  });

  it("trains on an empty corpus and predicts an empty file", () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), "toymodel-empty-"));
    const corpus = path.join(dir, "empty.txt");
    fs.writeFileSync(corpus, "");
    const tables = path.join(dir, "empty.tables");
    fs.writeFileSync(tables, "");
    const model = path.join(dir, "model.bin");
    expect(
      main([
        "train", "--corpus", corpus, "--tables", tables, "--out", model,
        "--epochs", "3",
      ]),
    ).toBe(0);
    const pred = path.join(dir, "pred.tables");
    expect(main(["predict", "--model", model, "--corpus", corpus, "--out", pred])).toBe(0);
    expect(fs.readFileSync(pred, "utf-8")).toBe("");
  });
});
