/** Tiny CSV fixtures matching the harness output schemas. */

export function resultsCsv(options: { blankChromatic?: boolean } = {}): string {
  const chromatic = options.blankChromatic ? "" : "13.944000";
  const header =
    "instance,n,k,chi,alpha,strategy,interventions_used,node_accesses," +
    "info_lb,chromatic_lb,katona_lb_n,sepsys_size_chi,sepsys_size_n,wall_time";
  const rows = [
    `rc-n100-d1-s0,100,10,95,20,naive,14,120,4.750000,${chromatic},12.300000,18,20,0.120000`,
    `rc-n100-d1-s0,100,10,95,20,hybrid,6,40,4.750000,${chromatic},12.300000,18,20,0.310000`,
    `rc-n100-d1-s1,100,10,104,18,naive,16,130,5.200000,${chromatic},12.300000,19,20,0.110000`,
    `rc-n100-d1-s1,100,10,104,18,hybrid,7,44,5.200000,${chromatic},12.300000,19,20,0.290000`,
  ];
  return [header, ...rows].join("\n");
}

export function curvesCsv(): string {
  const header =
    "chi,info_lb,chromatic_lb,achievable_chi_sepsys,construction_chi_sepsys,sepsys_ub_n";
  const rows = [
    "10,0.500000,,,,20",
    "60,3.000000,9.100000,,,20",
    "110,5.500000,14.600000,180,190,20",
  ];
  return [header, ...rows].join("\n");
}
