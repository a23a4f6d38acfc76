function f0(x) { return x * 0 + 955; }
function f1(x) { return x * 1 + 749; }
function f2(x) { return x * 2 + 420; }
function f3(x) { return x * 3 + 461; }
function f4(x) { return x * 4 + 629; }
function f5(x) { return x * 5 + 770; }
function f6(x) { return x * 6 + 141; }
function f7(x) { return x * 7 + 659; }
function f8(x) { return x * 8 + 890; }
function f9(x) { return x * 9 + 293; }
function f10(x) { return x * 10 + 497; }
function f11(x) { return x * 11 + 50; }
function f12(x) { return x * 12 + 933; }
function f13(x) { return x * 13 + 949; }
function f14(x) { return x * 14 + 563; }
function f15(x) { return x * 15 + 130; }
function f16(x) { return x * 16 + 174; }
function f17(x) { return x * 17 + 483; }
function f18(x) { return x * 18 + 424; }
function f19(x) { return x * 19 + 351; }
function f20(x) { return x * 20 + 288; }
function f21(x) { return x * 21 + 304; }
function f22(x) { return x * 22 + 261; }
function f23(x) { return x * 23 + 756; }
function f24(x) { return x * 24 + 756; }
function f25(x) { return x * 25 + 999; }
function f26(x) { return x * 26 + 668; }
function f27(x) { return x * 27 + 266; }
function f28(x) { return x * 28 + 415; }
function f29(x) { return x * 29 + 671; }
function f30(x) { return x * 30 + 244; }
function f31(x) { return x * 31 + 308; }
function f32(x) { return x * 32 + 494; }
function f33(x) { return x * 33 + 570; }
function f34(x) { return x * 34 + 684; }
function f35(x) { return x * 35 + 403; }
function f36(x) { return x * 36 + 122; }
function f37(x) { return x * 37 + 171; }
function f38(x) { return x * 38 + 658; }
function f39(x) { return x * 39 + 165; }
function f40(x) { return x * 40 + 76; }
function f41(x) { return x * 41 + 212; }
function f42(x) { return x * 42 + 512; }
function f43(x) { return x * 43 + 927; }
function f44(x) { return x * 44 + 831; }
function f45(x) { return x * 45 + 509; }
function f46(x) { return x * 46 + 563; }
function f47(x) { return x * 47 + 225; }
function f48(x) { return x * 48 + 463; }
function f49(x) { return x * 49 + 928; }
function f50(x) { return x * 50 + 340; }
function f51(x) { return x * 51 + 777; }
function f52(x) { return x * 52 + 460; }
function f53(x) { return x * 53 + 437; }
function f54(x) { return x * 54 + 142; }
function f55(x) { return x * 55 + 560; }
function f56(x) { return x * 56 + 197; }
function f57(x) { return x * 57 + 249; }
function f58(x) { return x * 58 + 92; }
function f59(x) { return x * 59 + 178; }
function f60(x) { return x * 60 + 350; }
function f61(x) { return x * 61 + 569; }
function f62(x) { return x * 62 + 93; }
function f63(x) { return x * 63 + 326; }
function f64(x) { return x * 64 + 244; }
function f65(x) { return x * 65 + 377; }
function f66(x) { return x * 66 + 264; }
function f67(x) { return x * 67 + 828; }
function f68(x) { return x * 68 + 583; }
function f69(x) { return x * 69 + 206; }
function f70(x) { return x * 70 + 908; }
function f71(x) { return x * 71 + 20; }
function f72(x) { return x * 72 + 767; }
function f73(x) { return x * 73 + 891; }
function f74(x) { return x * 74 + 422; }
function f75(x) { return x * 75 + 392; }
function f76(x) { return x * 76 + 423; }
function f77(x) { return x * 77 + 763; }
function f78(x) { return x * 78 + 536; }
function f79(x) { return x * 79 + 215; }
function f80(x) { return x * 80 + 385; }
function f81(x) { return x * 81 + 276; }
function f82(x) { return x * 82 + 346; }
function f83(x) { return x * 83 + 770; }
function f84(x) { return x * 84 + 63; }
function f85(x) { return x * 85 + 510; }
function f86(x) { return x * 86 + 284; }
function f87(x) { return x * 87 + 588; }
function f88(x) { return x * 88 + 990; }
function f89(x) { return x * 89 + 368; }
function f90(x) { return x * 90 + 128; }
function f91(x) { return x * 91 + 703; }
function f92(x) { return x * 92 + 515; }
function f93(x) { return x * 93 + 541; }
function f94(x) { return x * 94 + 644; }
function f95(x) { return x * 95 + 809; }
function f96(x) { return x * 96 + 883; }
function f97(x) { return x * 97 + 868; }
function f98(x) { return x * 98 + 221; }
function f99(x) { return x * 99 + 94; }
function f100(x) { return x * 100 + 277; }
function f101(x) { return x * 101 + 918; }
function f102(x) { return x * 102 + 254; }
function f103(x) { return x * 103 + 393; }
function f104(x) { return x * 104 + 409; }
function f105(x) { return x * 105 + 661; }
function f106(x) { return x * 106 + 456; }
function f107(x) { return x * 107 + 442; }
function f108(x) { return x * 108 + 976; }
function f109(x) { return x * 109 + 319; }
function f110(x) { return x * 110 + 869; }
function f111(x) { return x * 111 + 833; }
function f112(x) { return x * 112 + 893; }
function f113(x) { return x * 113 + 991; }
function f114(x) { return x * 114 + 22; }
function f115(x) { return x * 115 + 130; }
function f116(x) { return x * 116 + 33; }
function f117(x) { return x * 117 + 435; }
function f118(x) { return x * 118 + 726; }
function f119(x) { return x * 119 + 782; }
function f120(x) { return x * 120 + 917; }
function f121(x) { return x * 121 + 823; }
function f122(x) { return x * 122 + 484; }
function f123(x) { return x * 123 + 991; }
function f124(x) { return x * 124 + 601; }
function f125(x) { return x * 125 + 501; }
function f126(x) { return x * 126 + 0; }
function f127(x) { return x * 127 + 74; }
function f128(x) { return x * 128 + 400; }
function f129(x) { return x * 129 + 952; }
function f130(x) { return x * 130 + 949; }
function f131(x) { return x * 131 + 950; }
function f132(x) { return x * 132 + 845; }
function f133(x) { return x * 133 + 540; }
function f134(x) { return x * 134 + 875; }
function f135(x) { return x * 135 + 479; }
function f136(x) { return x * 136 + 995; }
function f137(x) { return x * 137 + 459; }
function f138(x) { return x * 138 + 254; }
function f139(x) { return x * 139 + 801; }
function f140(x) { return x * 140 + 111; }
function f141(x) { return x * 141 + 229; }
function f142(x) { return x * 142 + 158; }
function f143(x) { return x * 143 + 155; }
function f144(x) { return x * 144 + 534; }
function f145(x) { return x * 145 + 995; }
function f146(x) { return x * 146 + 698; }
function f147(x) { return x * 147 + 111; }
function f148(x) { return x * 148 + 964; }
function f149(x) { return x * 149 + 845; }
function f150(x) { return x * 150 + 739; }
function f151(x) { return x * 151 + 717; }
function f152(x) { return x * 152 + 662; }
function f153(x) { return x * 153 + 866; }
function f154(x) { return x * 154 + 783; }
function f155(x) { return x * 155 + 916; }
function f156(x) { return x * 156 + 468; }
function f157(x) { return x * 157 + 87; }
function f158(x) { return x * 158 + 564; }
function f159(x) { return x * 159 + 795; }
function f160(x) { return x * 160 + 40; }
function f161(x) { return x * 161 + 1; }
function f162(x) { return x * 162 + 801; }
function f163(x) { return x * 163 + 128; }
function f164(x) { return x * 164 + 238; }
function f165(x) { return x * 165 + 583; }
function f166(x) { return x * 166 + 941; }
function f167(x) { return x * 167 + 38; }
function f168(x) { return x * 168 + 660; }
function f169(x) { return x * 169 + 732; }
function f170(x) { return x * 170 + 311; }
function f171(x) { return x * 171 + 985; }
function f172(x) { return x * 172 + 131; }
function f173(x) { return x * 173 + 641; }
function f174(x) { return x * 174 + 257; }
function f175(x) { return x * 175 + 540; }
function f176(x) { return x * 176 + 651; }
function f177(x) { return x * 177 + 447; }
function f178(x) { return x * 178 + 715; }
function f179(x) { return x * 179 + 782; }
function f180(x) { return x * 180 + 114; }
function f181(x) { return x * 181 + 101; }
function f182(x) { return x * 182 + 72; }
function f183(x) { return x * 183 + 307; }
function f184(x) { return x * 184 + 537; }
function f185(x) { return x * 185 + 966; }
function f186(x) { return x * 186 + 596; }
function f187(x) { return x * 187 + 196; }
function f188(x) { return x * 188 + 397; }
function f189(x) { return x * 189 + 267; }
function f190(x) { return x * 190 + 228; }
function f191(x) { return x * 191 + 809; }
function f192(x) { return x * 192 + 615; }
function f193(x) { return x * 193 + 1; }
function f194(x) { return x * 194 + 10; }
function f195(x) { return x * 195 + 550; }
function f196(x) { return x * 196 + 308; }
function f197(x) { return x * 197 + 471; }
function f198(x) { return x * 198 + 285; }
function f199(x) { return x * 199 + 981; }
function f200(x) { return x * 200 + 323; }
function f201(x) { return x * 201 + 660; }
function f202(x) { return x * 202 + 859; }
function f203(x) { return x * 203 + 904; }
function f204(x) { return x * 204 + 248; }
function f205(x) { return x * 205 + 486; }
function f206(x) { return x * 206 + 538; }
function f207(x) { return x * 207 + 240; }
function f208(x) { return x * 208 + 560; }
function f209(x) { return x * 209 + 252; }
function f210(x) { return x * 210 + 29; }
function f211(x) { return x * 211 + 983; }
function f212(x) { return x * 212 + 421; }
function f213(x) { return x * 213 + 721; }
function f214(x) { return x * 214 + 665; }
function f215(x) { return x * 215 + 314; }
function f216(x) { return x * 216 + 56; }
function f217(x) { return x * 217 + 22; }
function f218(x) { return x * 218 + 198; }
function f219(x) { return x * 219 + 510; }
function f220(x) { return x * 220 + 906; }
function f221(x) { return x * 221 + 690; }
function f222(x) { return x * 222 + 662; }
function f223(x) { return x * 223 + 430; }
function f224(x) { return x * 224 + 83; }
function f225(x) { return x * 225 + 263; }
function f226(x) { return x * 226 + 233; }
function f227(x) { return x * 227 + 683; }
function f228(x) { return x * 228 + 434; }
function f229(x) { return x * 229 + 947; }
function f230(x) { return x * 230 + 379; }
function f231(x) { return x * 231 + 232; }
function f232(x) { return x * 232 + 504; }
function f233(x) { return x * 233 + 34; }
function f234(x) { return x * 234 + 712; }
function f235(x) { return x * 235 + 346; }
function f236(x) { return x * 236 + 735; }
function f237(x) { return x * 237 + 430; }
function f238(x) { return x * 238 + 371; }
function f239(x) { return x * 239 + 698; }
function f240(x) { return x * 240 + 405; }
function f241(x) { return x * 241 + 202; }
function f242(x) { return x * 242 + 6; }
function f243(x) { return x * 243 + 816; }
function f244(x) { return x * 244 + 299; }
function f245(x) { return x * 245 + 756; }
function f246(x) { return x * 246 + 865; }
function f247(x) { return x * 247 + 516; }
function f248(x) { return x * 248 + 69; }
function f249(x) { return x * 249 + 210; }
function f250(x) { return x * 250 + 507; }
function f251(x) { return x * 251 + 993; }
function f252(x) { return x * 252 + 205; }
function f253(x) { return x * 253 + 319; }
function f254(x) { return x * 254 + 784; }
function f255(x) { return x * 255 + 839; }
function f256(x) { return x * 256 + 198; }
function f257(x) { return x * 257 + 236; }
function f258(x) { return x * 258 + 476; }
function f259(x) { return x * 259 + 226; }
function f260(x) { return x * 260 + 271; }
function f261(x) { return x * 261 + 778; }
function f262(x) { return x * 262 + 910; }
function f263(x) { return x * 263 + 302; }
function f264(x) { return x * 264 + 111; }
function f265(x) { return x * 265 + 974; }
function f266(x) { return x * 266 + 638; }
function f267(x) { return x * 267 + 507; }
function f268(x) { return x * 268 + 624; }
function f269(x) { return x * 269 + 191; }
function f270(x) { return x * 270 + 917; }
function f271(x) { return x * 271 + 228; }
function f272(x) { return x * 272 + 496; }
function f273(x) { return x * 273 + 427; }
function f274(x) { return x * 274 + 932; }
function f275(x) { return x * 275 + 681; }
function f276(x) { return x * 276 + 57; }
function f277(x) { return x * 277 + 971; }
function f278(x) { return x * 278 + 609; }
function f279(x) { return x * 279 + 149; }
function f280(x) { return x * 280 + 944; }
function f281(x) { return x * 281 + 402; }
function f282(x) { return x * 282 + 55; }
function f283(x) { return x * 283 + 218; }
function f284(x) { return x * 284 + 24; }
function f285(x) { return x * 285 + 997; }
function f286(x) { return x * 286 + 610; }
function f287(x) { return x * 287 + 145; }
function f288(x) { return x * 288 + 425; }
function f289(x) { return x * 289 + 53; }
function f290(x) { return x * 290 + 726; }
function f291(x) { return x * 291 + 61; }
function f292(x) { return x * 292 + 188; }
function f293(x) { return x * 293 + 402; }
function f294(x) { return x * 294 + 460; }
function f295(x) { return x * 295 + 919; }
function f296(x) { return x * 296 + 729; }
function f297(x) { return x * 297 + 904; }
function f298(x) { return x * 298 + 321; }
function f299(x) { return x * 299 + 750; }
function f300(x) { return x * 300 + 115; }
function f301(x) { return x * 301 + 81; }
function f302(x) { return x * 302 + 953; }
function f303(x) { return x * 303 + 169; }
function f304(x) { return x * 304 + 337; }
function f305(x) { return x * 305 + 195; }
function f306(x) { return x * 306 + 189; }
function f307(x) { return x * 307 + 668; }
function f308(x) { return x * 308 + 958; }
function f309(x) { return x * 309 + 537; }
function f310(x) { return x * 310 + 764; }
function f311(x) { return x * 311 + 478; }
function f312(x) { return x * 312 + 32; }
function f313(x) { return x * 313 + 319; }
function f314(x) { return x * 314 + 680; }
function f315(x) { return x * 315 + 742; }
function f316(x) { return x * 316 + 387; }
function f317(x) { return x * 317 + 859; }
function f318(x) { return x * 318 + 382; }
function f319(x) { return x * 319 + 339; }
function f320(x) { return x * 320 + 453; }
function f321(x) { return x * 321 + 173; }
function f322(x) { return x * 322 + 111; }
function f323(x) { return x * 323 + 2; }
function f324(x) { return x * 324 + 80; }
function f325(x) { return x * 325 + 286; }
function f326(x) { return x * 326 + 82; }
function f327(x) { return x * 327 + 359; }
function f328(x) { return x * 328 + 430; }
function f329(x) { return x * 329 + 978; }
function f330(x) { return x * 330 + 906; }
function f331(x) { return x * 331 + 126; }
function f332(x) { return x * 332 + 574; }
function f333(x) { return x * 333 + 987; }
function f334(x) { return x * 334 + 777; }
function f335(x) { return x * 335 + 212; }
function f336(x) { return x * 336 + 389; }
function f337(x) { return x * 337 + 365; }
function f338(x) { return x * 338 + 787; }
function f339(x) { return x * 339 + 841; }
function f340(x) { return x * 340 + 316; }
function f341(x) { return x * 341 + 841; }
function f342(x) { return x * 342 + 823; }
function f343(x) { return x * 343 + 442; }
function f344(x) { return x * 344 + 89; }
function f345(x) { return x * 345 + 50; }
function f346(x) { return x * 346 + 722; }
function f347(x) { return x * 347 + 484; }
function f348(x) { return x * 348 + 200; }
function f349(x) { return x * 349 + 381; }
function f350(x) { return x * 350 + 554; }
function f351(x) { return x * 351 + 941; }
function f352(x) { return x * 352 + 457; }
function f353(x) { return x * 353 + 197; }
function f354(x) { return x * 354 + 331; }
function f355(x) { return x * 355 + 372; }
function f356(x) { return x * 356 + 755; }
function f357(x) { return x * 357 + 918; }
function f358(x) { return x * 358 + 485; }
function f359(x) { return x * 359 + 31; }
function f360(x) { return x * 360 + 646; }
function f361(x) { return x * 361 + 420; }
function f362(x) { return x * 362 + 253; }
function f363(x) { return x * 363 + 831; }
function f364(x) { return x * 364 + 640; }
function f365(x) { return x * 365 + 785; }
function f366(x) { return x * 366 + 414; }
function f367(x) { return x * 367 + 41; }
function f368(x) { return x * 368 + 384; }
function f369(x) { return x * 369 + 35; }
function f370(x) { return x * 370 + 475; }
function f371(x) { return x * 371 + 64; }
function f372(x) { return x * 372 + 822; }
function f373(x) { return x * 373 + 942; }
function f374(x) { return x * 374 + 63; }
function f375(x) { return x * 375 + 263; }
function f376(x) { return x * 376 + 199; }
function f377(x) { return x * 377 + 765; }
function f378(x) { return x * 378 + 64; }
function f379(x) { return x * 379 + 920; }
function f380(x) { return x * 380 + 620; }
function f381(x) { return x * 381 + 347; }
function f382(x) { return x * 382 + 371; }
function f383(x) { return x * 383 + 278; }
function f384(x) { return x * 384 + 343; }
function f385(x) { return x * 385 + 980; }
function f386(x) { return x * 386 + 976; }
function f387(x) { return x * 387 + 631; }
function f388(x) { return x * 388 + 44; }
function f389(x) { return x * 389 + 268; }
function f390(x) { return x * 390 + 764; }
function f391(x) { return x * 391 + 733; }
function f392(x) { return x * 392 + 706; }
function f393(x) { return x * 393 + 324; }
function f394(x) { return x * 394 + 946; }
function f395(x) { return x * 395 + 282; }
function f396(x) { return x * 396 + 304; }
function f397(x) { return x * 397 + 3; }
function f398(x) { return x * 398 + 738; }
function f399(x) { return x * 399 + 773; }
function f400(x) { return x * 400 + 609; }
function f401(x) { return x * 401 + 938; }
function f402(x) { return x * 402 + 824; }
function f403(x) { return x * 403 + 649; }
function f404(x) { return x * 404 + 969; }
function f405(x) { return x * 405 + 965; }
function f406(x) { return x * 406 + 66; }
function f407(x) { return x * 407 + 24; }
function f408(x) { return x * 408 + 845; }
function f409(x) { return x * 409 + 239; }
function f410(x) { return x * 410 + 109; }
function f411(x) { return x * 411 + 486; }
function f412(x) { return x * 412 + 732; }
function f413(x) { return x * 413 + 979; }
function f414(x) { return x * 414 + 476; }
function f415(x) { return x * 415 + 976; }
function f416(x) { return x * 416 + 794; }
function f417(x) { return x * 417 + 395; }
function f418(x) { return x * 418 + 808; }
function f419(x) { return x * 419 + 257; }
function f420(x) { return x * 420 + 935; }
function f421(x) { return x * 421 + 440; }
function f422(x) { return x * 422 + 834; }
function f423(x) { return x * 423 + 505; }
function f424(x) { return x * 424 + 135; }
function f425(x) { return x * 425 + 950; }
function f426(x) { return x * 426 + 508; }
function f427(x) { return x * 427 + 187; }
function f428(x) { return x * 428 + 8; }
function f429(x) { return x * 429 + 821; }
function f430(x) { return x * 430 + 953; }
function f431(x) { return x * 431 + 756; }
function f432(x) { return x * 432 + 310; }
function f433(x) { return x * 433 + 842; }
function f434(x) { return x * 434 + 708; }
function f435(x) { return x * 435 + 791; }
function f436(x) { return x * 436 + 154; }
function f437(x) { return x * 437 + 621; }
function f438(x) { return x * 438 + 241; }
function f439(x) { return x * 439 + 335; }
function f440(x) { return x * 440 + 881; }
function f441(x) { return x * 441 + 327; }
function f442(x) { return x * 442 + 471; }
function f443(x) { return x * 443 + 370; }
function f444(x) { return x * 444 + 802; }
function f445(x) { return x * 445 + 801; }
function f446(x) { return x * 446 + 610; }
function f447(x) { return x * 447 + 80; }
function f448(x) { return x * 448 + 524; }
function f449(x) { return x * 449 + 202; }
function f450(x) { return x * 450 + 401; }
function f451(x) { return x * 451 + 770; }
function f452(x) { return x * 452 + 163; }
function f453(x) { return x * 453 + 253; }
function f454(x) { return x * 454 + 417; }
function f455(x) { return x * 455 + 66; }
function f456(x) { return x * 456 + 665; }
function f457(x) { return x * 457 + 34; }
function f458(x) { return x * 458 + 493; }
function f459(x) { return x * 459 + 565; }
function f460(x) { return x * 460 + 557; }
function f461(x) { return x * 461 + 333; }
function f462(x) { return x * 462 + 164; }
function f463(x) { return x * 463 + 436; }
function f464(x) { return x * 464 + 904; }
function f465(x) { return x * 465 + 107; }
function f466(x) { return x * 466 + 73; }
function f467(x) { return x * 467 + 271; }
function f468(x) { return x * 468 + 639; }
function f469(x) { return x * 469 + 86; }
function f470(x) { return x * 470 + 213; }
function f471(x) { return x * 471 + 98; }
function f472(x) { return x * 472 + 431; }
function f473(x) { return x * 473 + 510; }
function f474(x) { return x * 474 + 726; }
function f475(x) { return x * 475 + 995; }
function f476(x) { return x * 476 + 457; }
function f477(x) { return x * 477 + 177; }
function f478(x) { return x * 478 + 239; }
function f479(x) { return x * 479 + 136; }
function f480(x) { return x * 480 + 426; }
function f481(x) { return x * 481 + 471; }
function f482(x) { return x * 482 + 635; }
function f483(x) { return x * 483 + 912; }
function f484(x) { return x * 484 + 690; }
function f485(x) { return x * 485 + 240; }
function f486(x) { return x * 486 + 765; }
function f487(x) { return x * 487 + 551; }
function f488(x) { return x * 488 + 867; }
function f489(x) { return x * 489 + 792; }
function f490(x) { return x * 490 + 680; }
function f491(x) { return x * 491 + 777; }
function f492(x) { return x * 492 + 124; }
function f493(x) { return x * 493 + 798; }
function f494(x) { return x * 494 + 861; }
function f495(x) { return x * 495 + 300; }
function f496(x) { return x * 496 + 300; }
function f497(x) { return x * 497 + 286; }
function f498(x) { return x * 498 + 580; }
function f499(x) { return x * 499 + 274; }
function f500(x) { return x * 500 + 381; }
function f501(x) { return x * 501 + 260; }
function f502(x) { return x * 502 + 755; }
function f503(x) { return x * 503 + 266; }
function f504(x) { return x * 504 + 203; }
function f505(x) { return x * 505 + 449; }
function f506(x) { return x * 506 + 253; }
function f507(x) { return x * 507 + 190; }
function f508(x) { return x * 508 + 251; }
function f509(x) { return x * 509 + 241; }
function f510(x) { return x * 510 + 157; }
function f511(x) { return x * 511 + 288; }
function f512(x) { return x * 512 + 905; }
function f513(x) { return x * 513 + 929; }
function f514(x) { return x * 514 + 592; }
function f515(x) { return x * 515 + 192; }
function f516(x) { return x * 516 + 334; }
function f517(x) { return x * 517 + 66; }
function f518(x) { return x * 518 + 405; }
function f519(x) { return x * 519 + 257; }
function f520(x) { return x * 520 + 251; }
function f521(x) { return x * 521 + 519; }
function f522(x) { return x * 522 + 538; }
function f523(x) { return x * 523 + 236; }
function f524(x) { return x * 524 + 665; }
function f525(x) { return x * 525 + 827; }
function f526(x) { return x * 526 + 102; }
function f527(x) { return x * 527 + 669; }
function f528(x) { return x * 528 + 475; }
function f529(x) { return x * 529 + 37; }
function f530(x) { return x * 530 + 104; }
function f531(x) { return x * 531 + 4; }
function f532(x) { return x * 532 + 486; }
function f533(x) { return x * 533 + 904; }
function f534(x) { return x * 534 + 838; }
function f535(x) { return x * 535 + 236; }
function f536(x) { return x * 536 + 860; }
function f537(x) { return x * 537 + 459; }
function f538(x) { return x * 538 + 936; }
function f539(x) { return x * 539 + 382; }
function f540(x) { return x * 540 + 41; }
function f541(x) { return x * 541 + 897; }
function f542(x) { return x * 542 + 300; }
function f543(x) { return x * 543 + 238; }
function f544(x) { return x * 544 + 122; }
function f545(x) { return x * 545 + 51; }
function f546(x) { return x * 546 + 194; }
function f547(x) { return x * 547 + 614; }
function f548(x) { return x * 548 + 996; }
function f549(x) { return x * 549 + 847; }
function f550(x) { return x * 550 + 597; }
function f551(x) { return x * 551 + 198; }
function f552(x) { return x * 552 + 952; }
function f553(x) { return x * 553 + 76; }
function f554(x) { return x * 554 + 381; }
function f555(x) { return x * 555 + 524; }
function f556(x) { return x * 556 + 886; }
function f557(x) { return x * 557 + 182; }
function f558(x) { return x * 558 + 459; }
function f559(x) { return x * 559 + 617; }
function f560(x) { return x * 560 + 266; }
function f561(x) { return x * 561 + 793; }
function f562(x) { return x * 562 + 796; }
function f563(x) { return x * 563 + 680; }
function f564(x) { return x * 564 + 968; }
function f565(x) { return x * 565 + 6; }
function f566(x) { return x * 566 + 108; }
function f567(x) { return x * 567 + 652; }
function f568(x) { return x * 568 + 610; }
function f569(x) { return x * 569 + 726; }
function f570(x) { return x * 570 + 634; }
function f571(x) { return x * 571 + 358; }
function f572(x) { return x * 572 + 222; }
function f573(x) { return x * 573 + 38; }
function f574(x) { return x * 574 + 377; }
function f575(x) { return x * 575 + 348; }
function f576(x) { return x * 576 + 144; }
function f577(x) { return x * 577 + 45; }
function f578(x) { return x * 578 + 208; }
function f579(x) { return x * 579 + 261; }
function f580(x) { return x * 580 + 39; }
function f581(x) { return x * 581 + 613; }
function f582(x) { return x * 582 + 749; }
function f583(x) { return x * 583 + 667; }
function f584(x) { return x * 584 + 935; }
function f585(x) { return x * 585 + 208; }
function f586(x) { return x * 586 + 834; }
function f587(x) { return x * 587 + 11; }
function f588(x) { return x * 588 + 838; }
function f589(x) { return x * 589 + 335; }
function f590(x) { return x * 590 + 418; }
function f591(x) { return x * 591 + 694; }
function f592(x) { return x * 592 + 380; }
function f593(x) { return x * 593 + 189; }
function f594(x) { return x * 594 + 635; }
function f595(x) { return x * 595 + 319; }
function f596(x) { return x * 596 + 79; }
function f597(x) { return x * 597 + 208; }
function f598(x) { return x * 598 + 32; }
function f599(x) { return x * 599 + 814; }
function f600(x) { return x * 600 + 507; }
function f601(x) { return x * 601 + 561; }
function f602(x) { return x * 602 + 495; }
function f603(x) { return x * 603 + 64; }
function f604(x) { return x * 604 + 417; }
function f605(x) { return x * 605 + 103; }
function f606(x) { return x * 606 + 814; }
function f607(x) { return x * 607 + 404; }
function f608(x) { return x * 608 + 679; }
function f609(x) { return x * 609 + 563; }
function f610(x) { return x * 610 + 158; }
function f611(x) { return x * 611 + 654; }
function f612(x) { return x * 612 + 546; }
function f613(x) { return x * 613 + 93; }
function f614(x) { return x * 614 + 668; }
function f615(x) { return x * 615 + 167; }
function f616(x) { return x * 616 + 407; }
function f617(x) { return x * 617 + 712; }
function f618(x) { return x * 618 + 277; }
function f619(x) { return x * 619 + 419; }
function f620(x) { return x * 620 + 290; }
function f621(x) { return x * 621 + 683; }
function f622(x) { return x * 622 + 314; }
function f623(x) { return x * 623 + 427; }
function f624(x) { return x * 624 + 976; }
function f625(x) { return x * 625 + 52; }
function f626(x) { return x * 626 + 319; }
function f627(x) { return x * 627 + 763; }
function f628(x) { return x * 628 + 580; }
function f629(x) { return x * 629 + 904; }
function f630(x) { return x * 630 + 365; }
function f631(x) { return x * 631 + 424; }
function f632(x) { return x * 632 + 426; }
function f633(x) { return x * 633 + 18; }
function f634(x) { return x * 634 + 884; }
function f635(x) { return x * 635 + 785; }
function f636(x) { return x * 636 + 821; }
function f637(x) { return x * 637 + 372; }
function f638(x) { return x * 638 + 659; }
function f639(x) { return x * 639 + 201; }
function f640(x) { return x * 640 + 400; }
function f641(x) { return x * 641 + 745; }
function f642(x) { return x * 642 + 414; }
function f643(x) { return x * 643 + 208; }
function f644(x) { return x * 644 + 964; }
function f645(x) { return x * 645 + 6; }
function f646(x) { return x * 646 + 444; }
function f647(x) { return x * 647 + 923; }
function f648(x) { return x * 648 + 160; }
function f649(x) { return x * 649 + 433; }
function f650(x) { return x * 650 + 116; }
function f651(x) { return x * 651 + 840; }
function f652(x) { return x * 652 + 92; }
function f653(x) { return x * 653 + 415; }
function f654(x) { return x * 654 + 591; }
function f655(x) { return x * 655 + 904; }
function f656(x) { return x * 656 + 373; }
function f657(x) { return x * 657 + 471; }
function f658(x) { return x * 658 + 791; }
function f659(x) { return x * 659 + 166; }
function f660(x) { return x * 660 + 133; }
function f661(x) { return x * 661 + 15; }
function f662(x) { return x * 662 + 52; }
function f663(x) { return x * 663 + 564; }
function f664(x) { return x * 664 + 145; }
function f665(x) { return x * 665 + 656; }
function f666(x) { return x * 666 + 825; }
function f667(x) { return x * 667 + 931; }
function f668(x) { return x * 668 + 406; }
function f669(x) { return x * 669 + 91; }
function f670(x) { return x * 670 + 586; }
function f671(x) { return x * 671 + 637; }
function f672(x) { return x * 672 + 949; }
function f673(x) { return x * 673 + 379; }
function f674(x) { return x * 674 + 754; }
function f675(x) { return x * 675 + 516; }
function f676(x) { return x * 676 + 175; }
function f677(x) { return x * 677 + 149; }
function f678(x) { return x * 678 + 356; }
function f679(x) { return x * 679 + 290; }
function f680(x) { return x * 680 + 165; }
function f681(x) { return x * 681 + 533; }
function f682(x) { return x * 682 + 175; }
function f683(x) { return x * 683 + 947; }
function f684(x) { return x * 684 + 68; }
function f685(x) { return x * 685 + 111; }
function f686(x) { return x * 686 + 392; }
function f687(x) { return x * 687 + 502; }
function f688(x) { return x * 688 + 771; }
function f689(x) { return x * 689 + 824; }
function f690(x) { return x * 690 + 811; }
function f691(x) { return x * 691 + 990; }
function f692(x) { return x * 692 + 824; }
function f693(x) { return x * 693 + 202; }
function f694(x) { return x * 694 + 308; }
function f695(x) { return x * 695 + 129; }
function f696(x) { return x * 696 + 857; }
function f697(x) { return x * 697 + 965; }
function f698(x) { return x * 698 + 44; }
function f699(x) { return x * 699 + 998; }
function f700(x) { return x * 700 + 934; }
function f701(x) { return x * 701 + 494; }
function f702(x) { return x * 702 + 322; }
function f703(x) { return x * 703 + 54; }
function f704(x) { return x * 704 + 622; }
function f705(x) { return x * 705 + 948; }
function f706(x) { return x * 706 + 651; }
function f707(x) { return x * 707 + 397; }
function f708(x) { return x * 708 + 88; }
function f709(x) { return x * 709 + 925; }
function f710(x) { return x * 710 + 729; }
function f711(x) { return x * 711 + 635; }
function f712(x) { return x * 712 + 704; }
function f713(x) { return x * 713 + 844; }
function f714(x) { return x * 714 + 912; }
function f715(x) { return x * 715 + 164; }
function f716(x) { return x * 716 + 655; }
function f717(x) { return x * 717 + 804; }
function f718(x) { return x * 718 + 877; }
function f719(x) { return x * 719 + 227; }
function f720(x) { return x * 720 + 635; }
function f721(x) { return x * 721 + 414; }
function f722(x) { return x * 722 + 629; }
function f723(x) { return x * 723 + 866; }
function f724(x) { return x * 724 + 200; }
function f725(x) { return x * 725 + 849; }
function f726(x) { return x * 726 + 484; }
function f727(x) { return x * 727 + 187; }
function f728(x) { return x * 728 + 578; }
function f729(x) { return x * 729 + 223; }
function f730(x) { return x * 730 + 42; }
function f731(x) { return x * 731 + 409; }
function f732(x) { return x * 732 + 961; }
function f733(x) { return x * 733 + 530; }
function f734(x) { return x * 734 + 160; }
function f735(x) { return x * 735 + 392; }
function f736(x) { return x * 736 + 367; }
function f737(x) { return x * 737 + 126; }
function f738(x) { return x * 738 + 153; }
function f739(x) { return x * 739 + 252; }
function f740(x) { return x * 740 + 993; }
function f741(x) { return x * 741 + 742; }
function f742(x) { return x * 742 + 835; }
function f743(x) { return x * 743 + 918; }
function f744(x) { return x * 744 + 197; }
function f745(x) { return x * 745 + 42; }
function f746(x) { return x * 746 + 905; }
function f747(x) { return x * 747 + 575; }
function f748(x) { return x * 748 + 862; }
function f749(x) { return x * 749 + 775; }
function f750(x) { return x * 750 + 688; }
function f751(x) { return x * 751 + 39; }
function f752(x) { return x * 752 + 683; }
function f753(x) { return x * 753 + 858; }
function f754(x) { return x * 754 + 331; }
function f755(x) { return x * 755 + 120; }
function f756(x) { return x * 756 + 399; }
function f757(x) { return x * 757 + 613; }
function f758(x) { return x * 758 + 466; }
function f759(x) { return x * 759 + 563; }
function f760(x) { return x * 760 + 869; }
function f761(x) { return x * 761 + 642; }
function f762(x) { return x * 762 + 796; }
function f763(x) { return x * 763 + 313; }
function f764(x) { return x * 764 + 664; }
function f765(x) { return x * 765 + 430; }
function f766(x) { return x * 766 + 315; }
function f767(x) { return x * 767 + 596; }
function f768(x) { return x * 768 + 255; }
function f769(x) { return x * 769 + 435; }
function f770(x) { return x * 770 + 398; }
function f771(x) { return x * 771 + 674; }
function f772(x) { return x * 772 + 376; }
function f773(x) { return x * 773 + 457; }
function f774(x) { return x * 774 + 515; }
function f775(x) { return x * 775 + 448; }
function f776(x) { return x * 776 + 183; }
function f777(x) { return x * 777 + 23; }
function f778(x) { return x * 778 + 3; }
function f779(x) { return x * 779 + 633; }
function f780(x) { return x * 780 + 501; }
function f781(x) { return x * 781 + 476; }
function f782(x) { return x * 782 + 240; }
function f783(x) { return x * 783 + 457; }
function f784(x) { return x * 784 + 781; }
function f785(x) { return x * 785 + 633; }
function f786(x) { return x * 786 + 798; }
function f787(x) { return x * 787 + 838; }
function f788(x) { return x * 788 + 469; }
function f789(x) { return x * 789 + 856; }
function f790(x) { return x * 790 + 183; }
function f791(x) { return x * 791 + 829; }
function f792(x) { return x * 792 + 484; }
function f793(x) { return x * 793 + 409; }
function f794(x) { return x * 794 + 109; }
function f795(x) { return x * 795 + 68; }
function f796(x) { return x * 796 + 131; }
function f797(x) { return x * 797 + 367; }
function f798(x) { return x * 798 + 440; }
function f799(x) { return x * 799 + 374; }
function f800(x) { return x * 800 + 93; }
function f801(x) { return x * 801 + 821; }
function f802(x) { return x * 802 + 452; }
function f803(x) { return x * 803 + 516; }
function f804(x) { return x * 804 + 522; }
function f805(x) { return x * 805 + 672; }
function f806(x) { return x * 806 + 41; }
function f807(x) { return x * 807 + 41; }
function f808(x) { return x * 808 + 651; }
function f809(x) { return x * 809 + 133; }
function f810(x) { return x * 810 + 84; }
function f811(x) { return x * 811 + 944; }
function f812(x) { return x * 812 + 751; }
function f813(x) { return x * 813 + 321; }
function f814(x) { return x * 814 + 796; }
function f815(x) { return x * 815 + 737; }
function f816(x) { return x * 816 + 523; }
function f817(x) { return x * 817 + 81; }
function f818(x) { return x * 818 + 55; }
function f819(x) { return x * 819 + 770; }
function f820(x) { return x * 820 + 516; }
function f821(x) { return x * 821 + 916; }
function f822(x) { return x * 822 + 386; }
function f823(x) { return x * 823 + 668; }
function f824(x) { return x * 824 + 973; }
function f825(x) { return x * 825 + 803; }
function f826(x) { return x * 826 + 139; }
function f827(x) { return x * 827 + 26; }
function f828(x) { return x * 828 + 877; }
function f829(x) { return x * 829 + 67; }
function f830(x) { return x * 830 + 628; }
function f831(x) { return x * 831 + 749; }
function f832(x) { return x * 832 + 709; }
function f833(x) { return x * 833 + 834; }
function f834(x) { return x * 834 + 112; }
function f835(x) { return x * 835 + 198; }
function f836(x) { return x * 836 + 134; }
function f837(x) { return x * 837 + 906; }
function f838(x) { return x * 838 + 503; }
function f839(x) { return x * 839 + 294; }
function f840(x) { return x * 840 + 979; }
function f841(x) { return x * 841 + 830; }
function f842(x) { return x * 842 + 938; }
function f843(x) { return x * 843 + 814; }
function f844(x) { return x * 844 + 169; }
function f845(x) { return x * 845 + 702; }
function f846(x) { return x * 846 + 807; }
function f847(x) { return x * 847 + 738; }
function f848(x) { return x * 848 + 952; }
function f849(x) { return x * 849 + 226; }
function f850(x) { return x * 850 + 67; }
function f851(x) { return x * 851 + 853; }
function f852(x) { return x * 852 + 359; }
function f853(x) { return x * 853 + 625; }
function f854(x) { return x * 854 + 774; }
function f855(x) { return x * 855 + 258; }
function f856(x) { return x * 856 + 162; }
function f857(x) { return x * 857 + 331; }
function f858(x) { return x * 858 + 918; }
function f859(x) { return x * 859 + 628; }
function f860(x) { return x * 860 + 281; }
function f861(x) { return x * 861 + 926; }
function f862(x) { return x * 862 + 835; }
function f863(x) { return x * 863 + 467; }
function f864(x) { return x * 864 + 147; }
function f865(x) { return x * 865 + 260; }
function f866(x) { return x * 866 + 514; }
function f867(x) { return x * 867 + 987; }
function f868(x) { return x * 868 + 941; }
function f869(x) { return x * 869 + 491; }
function f870(x) { return x * 870 + 213; }
function f871(x) { return x * 871 + 606; }
function f872(x) { return x * 872 + 269; }
function f873(x) { return x * 873 + 630; }
function f874(x) { return x * 874 + 518; }
function f875(x) { return x * 875 + 243; }
function f876(x) { return x * 876 + 326; }
function f877(x) { return x * 877 + 381; }
function f878(x) { return x * 878 + 37; }
function f879(x) { return x * 879 + 203; }
function f880(x) { return x * 880 + 186; }
function f881(x) { return x * 881 + 413; }
function f882(x) { return x * 882 + 165; }
function f883(x) { return x * 883 + 651; }
function f884(x) { return x * 884 + 958; }
function f885(x) { return x * 885 + 284; }
function f886(x) { return x * 886 + 695; }
function f887(x) { return x * 887 + 335; }
function f888(x) { return x * 888 + 916; }
function f889(x) { return x * 889 + 385; }
function f890(x) { return x * 890 + 172; }
function f891(x) { return x * 891 + 811; }
function f892(x) { return x * 892 + 803; }
function f893(x) { return x * 893 + 270; }
function f894(x) { return x * 894 + 117; }
function f895(x) { return x * 895 + 786; }
function f896(x) { return x * 896 + 543; }
function f897(x) { return x * 897 + 49; }
function f898(x) { return x * 898 + 651; }
function f899(x) { return x * 899 + 878; }
