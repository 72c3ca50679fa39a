/** Shared test data: the three-sentence fixture corpus and its 3d tables. */

export const FIXTURE_CORPUS =
  "The menu is interesting and quite reasonably priced .####" +
  "[([1], [3], 'POS'), ([1], [6, 7], 'POS'), ([7], [6], 'POS')]\n" +
  "BEST spicy tuna roll , great asian salad .####" +
  "[([1, 2, 3], [0], 'POS'), ([6, 7], [5], 'POS')]\n" +
  "Service is excellent , no wait , and you get a lot for the price .####" +
  "[([0], [2], 'POS'), ([5], [4], 'POS')]\n";

// Canonical output of `spantag encode --scheme 3d` over FIXTURE_CORPUS;
// the end-to-end test regenerates this through the real CLI.
export const FIXTURE_TABLES_3D = `#table s0 9 3d
1 1 A-N-N
1 3 N-N-POS
1 7 N-N-POS
3 3 N-O-N
6 6 N-O-N
6 7 N-O-POS
7 7 A-N-N

#table s1 9 3d
0 0 N-O-N
0 3 N-N-POS
1 3 A-N-N
5 5 N-O-N
5 7 N-N-POS
6 7 A-N-N

#table s2 16 3d
0 0 A-N-N
0 2 N-N-POS
2 2 N-O-N
4 4 N-O-N
4 5 N-N-POS
5 5 A-N-N
`;
