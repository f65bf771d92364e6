// Scroll helpers without a skipcol computation.

    static int
wrapped_rows(win_T *wp, long vcol)
{
    int	    width1 = wp->w_leftcol + 1;
    int	    width2 = width1 + curwin_col_off2();
    if (vcol < width1)
	return 0;
    return (vcol - width1) / width2 + 1;
}
