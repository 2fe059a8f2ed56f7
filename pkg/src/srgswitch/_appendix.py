"""graph6 records of the seed graphs that are not built from geometry."""

APPENDIX_SEEDS = {
    "sts19-srg57": (
        (57, 24, 11, 9),
        b"".join((
            rb"x`MjkWRlZLZHuJY^J]~NvkT?^_KB[Sl_LAimY_Wxy_WFSGj`M_zopIn|?ZeaYYMo{Ceu",
            rb"NC\Lap{\_]???^~{LiEiOKMaiaLQISj?taGIsd[cIMQLRoHMSMq[`wg@@PUDl@xpcG[p",
            rb"@|QlDCSeedCiHOrJ_yOOwdzLASGw`zhrE_OjhCwlACKySW?Q@|[ouOBOBtuPrHaFGHuO",
            rb"eb?sYB[ob`KOe_u@rbE@jGHoMY[@p{_deCTgBbe_qqCVgBb_]E@rK{?????~~~~",
        )),
    ),
    "sts21-srg70": (
        (70, 27, 12, 9),
        b"".join((
            rb"~?@EQd_pJPwdUi{chWU`w]W^hm`Xt?}pX^HYwRu\G}WF~~sLX?Sdp?kd_HmLGAtS`BFT",
            rb"WGdYLGqAy[HaIpe]?NADaiCLQcXOc}pO_`Z{aaCI^eGbhlGXCRTqcF_@}?N{RWiY[QPf",
            rb"Eal`_???F~~{TDQGdcAIbKCXaAdOa`[cBUgGSMe?ss[_EIOakhi?cW`SqET?`ESzpHe@",
            rb"?havWEX_oEWWXURAHe_ChDpg_rW?YNoo?pwK?oxkKQeABD[PqQLHADAyakGXOCHoI}V@",
            rb"Dg?`i@^\BgJQ_GbqIIV@RD@@UooE?@hQ_|h_tH?ASl?zUOy?R@PhOJ_FeoBGITgCw@xr",
            rb"?eAa?^JUORW@cDG@{ueAMW?F`tgC\KCMg?F`ySAiqAVS?Bow@{c?{o~???????~~~~w",
        )),
    ),
    "haemers4-srg96": (
        (96, 19, 2, 4),
        b"".join((
            rb"~?@_????CA?[_K?C?G?S_Ao???q@cACo?W?AA??OO??oEHC_WQCCGOGGCO_?Ew?CQ?d?P",
            rb"_G[?S?d?@O?s?ScY??D`J??@EGE@OPG`GDE?@o??@OD@_`A_GaP@PC??a_aG_?OSH`IA?",
            rb"Q@@GSGAOC?WBD?S?GWCg_g?Q?CgOPJ?OAEGAKoCCSAH?OgGGgHCAD?cO_CPG@_W_OG_oA",
            rb"OAGDCO@C?`C?oa?__Pg@?O?oCC`OG@?C__`?`AG`?AC?x?cD@?CA@WB?wKe?K?Ka@__aK",
            rb"g?SaGQGAaQ_DAEE?M??_^_??GOAQC`I@O?C_@cAQDA_??EECKe?W?WKKA_SI?@G?AQOWD",
            rb"@_?E?B??N~??????F}???????@}@QpO?OOa?K?GUcW?OOa?H?CoCS?@OaaG_CE@D??DAI",
            rb"Ga?OAa_PC@@CY?@?II@@GC@Cw?C?C`X?`GCU????CHQOGWCS_???G?????????F~~?BBo",
            rb"@_?oK?w_AGPGPa?_O@?QDAHCPDG?`?C?SD@_??@~w????Ko?I????AYeT@CB@@O????XU",
            rb"Y_`@GO@~_?????@xw?@oOIOOB_Gp?QG?OOOh?OF?aP?QG@?IR?E_GQA?OGK?_Ap_CgGO_",
            rb"_OCH?_DG_hO`?G?gA_@??UGGdAOA?I?a?O?EPPPCG@O`???iG?BDDAO_D?c??AgO????B",
            rb"_?wW?Fo?B_?K??AHO_P_gs?QOA_??@@aOGcDJ?BC@O???O@KE?]?wB?_?o???????????",
            rb"?@~~~",
        )),
    ),
}
