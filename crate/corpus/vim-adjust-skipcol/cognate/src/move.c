// move.c: Functions for moving the cursor and scrolling text.

#include "vim.h"

    static int
win_cols_0(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_1(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_2(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_3(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_4(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_5(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_6(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_7(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_8(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_9(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_10(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_11(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_12(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_13(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_14(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_15(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_16(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_17(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_18(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_19(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_20(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_21(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_22(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_23(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_24(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_25(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_26(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_27(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_28(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_29(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_30(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_31(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_32(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_33(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_34(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_35(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_36(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_37(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_38(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_39(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_40(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_41(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_42(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_43(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_44(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_45(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_46(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_47(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_48(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_49(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_50(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_51(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_52(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_53(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_54(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_55(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_56(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_57(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_58(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_59(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_60(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_61(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_62(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_63(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_64(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_65(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_66(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_67(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_68(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_69(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_70(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_71(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_72(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_73(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_74(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_75(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_76(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_77(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_78(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_79(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_80(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_81(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_82(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_83(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_84(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_85(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_86(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_87(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_88(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_89(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_90(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_91(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_92(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_93(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_94(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_95(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_96(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_97(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_98(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_99(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_100(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_101(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_102(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_103(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_104(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_105(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_106(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_107(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_108(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_109(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_110(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_111(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_112(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_113(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_114(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_115(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_116(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_117(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_118(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_119(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_120(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_121(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_122(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_123(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_124(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_125(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_126(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_127(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_128(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_129(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_130(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_131(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_132(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_133(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_134(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_135(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_136(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_137(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_138(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_139(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_140(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_141(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_142(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_143(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_144(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_145(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_146(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_147(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_148(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_149(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_150(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_151(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_152(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_153(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_154(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_155(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_156(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_157(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_158(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_159(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_160(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_161(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_162(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_163(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_164(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_165(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_166(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_167(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_168(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_169(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_170(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_171(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_172(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_173(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_174(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_175(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_176(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_177(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_178(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_179(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_180(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_181(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_182(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_183(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_184(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_185(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_186(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_187(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_188(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_189(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_190(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_191(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_192(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_193(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_194(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_195(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_196(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_197(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_198(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_199(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_200(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_201(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_202(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_203(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_204(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_205(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_206(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_207(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_208(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_209(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_210(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_211(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_212(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_213(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_214(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_215(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_216(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_217(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_218(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_219(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_220(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_221(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_222(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_223(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_224(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_225(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_226(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_227(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_228(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_229(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_230(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_231(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_232(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_233(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_234(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_235(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_236(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_237(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_238(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_239(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_240(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_241(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_242(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_243(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_244(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_245(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_246(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_247(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_248(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_249(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_250(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_251(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_252(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_253(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_254(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_255(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_256(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_257(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_258(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_259(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_260(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_261(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_262(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_263(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_264(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_265(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_266(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_267(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_268(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_269(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_270(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_271(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_272(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_273(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_274(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_275(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_276(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_277(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 5;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_278(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 6;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}

    static int
win_cols_279(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 7;
    if (cols < 4)
	cols = 4;
    return cols + wp->w_leftcol;
}

    static int
win_cols_280(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 1;
    if (cols < 0)
	cols = 0;
    return cols + wp->w_leftcol;
}

    static int
win_cols_281(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 2;
    if (cols < 1)
	cols = 1;
    return cols + wp->w_leftcol;
}

    static int
win_cols_282(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 3;
    if (cols < 2)
	cols = 2;
    return cols + wp->w_leftcol;
}

    static int
win_cols_283(win_T *wp, int extra)
{
    int	    cols = wp->w_width - extra * 4;
    if (cols < 3)
	cols = 3;
    return cols + wp->w_leftcol;
}




    void
scroll_cursor_bot(int min_scroll, int set_topbot)
{
    int		used;
    int		scrolled = 0;
    int		extra = 0;
    linenr_T	line_count;
    linenr_T	old_topline = curwin->w_topline;
    linenr_T	cln;		    // Cursor Line Number
    long	so = get_scrolloff_value();
    int		do_sms = curwin->w_p_wrap && curwin->w_p_sms;

    cln = curwin->w_cursor.lnum;
    if (set_topbot)
    {
	used = 0;
	curwin->w_botline = cln + 1;
	for (curwin->w_topline = curwin->w_botline;
		curwin->w_topline > 1;
		curwin->w_topline = line_count)
	{
	    line_count = curwin->w_topline - 1;
	    used += plines_win(curwin, line_count, TRUE);
	    if (used > curwin->w_height)
		break;
	}
	if (do_sms && curwin->w_topline == cln)
	{
	    int skip_lines = 0;
	    int width1 = curwin->w_width - curwin_col_off();
	    int width2 = width1 + curwin_col_off2();
	    // similar formula is used in curs_columns()
	    if (curwin->w_skipcol > width1)
		skip_lines += (curwin->w_skipcol - width1) / width2 + 1;
	    else if (curwin->w_skipcol > 0)
		skip_lines = 1;
	    scrolled += skip_lines;
	}
	curwin->w_empty_rows = 0;
    }
    if (scrolled + extra > min_scroll)
	curwin->w_valid &= ~VALID_TOPLINE;
    if (old_topline != curwin->w_topline)
	redraw_later(UPD_VALID);
}
