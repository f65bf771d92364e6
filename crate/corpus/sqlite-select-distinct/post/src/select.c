/*
** This file contains C code routines that are called by the parser
** to handle SELECT statements in SQLite.
*/
#include "sqliteInt.h"

typedef struct SortCtx SortCtx;
typedef struct DistinctCtx DistinctCtx;

/*
** Return the number of result columns for sub-select 0.
*/
static int selectColumnCount0(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 1.
*/
static int selectColumnCount1(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 2.
*/
static int selectColumnCount2(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 3.
*/
static int selectColumnCount3(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 4.
*/
static int selectColumnCount4(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 5.
*/
static int selectColumnCount5(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 6.
*/
static int selectColumnCount6(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 7.
*/
static int selectColumnCount7(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 8.
*/
static int selectColumnCount8(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 9.
*/
static int selectColumnCount9(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 10.
*/
static int selectColumnCount10(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 11.
*/
static int selectColumnCount11(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 12.
*/
static int selectColumnCount12(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 13.
*/
static int selectColumnCount13(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 14.
*/
static int selectColumnCount14(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 15.
*/
static int selectColumnCount15(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 16.
*/
static int selectColumnCount16(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 17.
*/
static int selectColumnCount17(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 18.
*/
static int selectColumnCount18(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 19.
*/
static int selectColumnCount19(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 20.
*/
static int selectColumnCount20(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 21.
*/
static int selectColumnCount21(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 22.
*/
static int selectColumnCount22(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 23.
*/
static int selectColumnCount23(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 24.
*/
static int selectColumnCount24(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 25.
*/
static int selectColumnCount25(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 26.
*/
static int selectColumnCount26(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 27.
*/
static int selectColumnCount27(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 28.
*/
static int selectColumnCount28(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 29.
*/
static int selectColumnCount29(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 30.
*/
static int selectColumnCount30(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 31.
*/
static int selectColumnCount31(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 32.
*/
static int selectColumnCount32(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 33.
*/
static int selectColumnCount33(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 34.
*/
static int selectColumnCount34(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 35.
*/
static int selectColumnCount35(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 36.
*/
static int selectColumnCount36(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 37.
*/
static int selectColumnCount37(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 38.
*/
static int selectColumnCount38(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 39.
*/
static int selectColumnCount39(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 40.
*/
static int selectColumnCount40(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 41.
*/
static int selectColumnCount41(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 42.
*/
static int selectColumnCount42(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 43.
*/
static int selectColumnCount43(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 44.
*/
static int selectColumnCount44(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 45.
*/
static int selectColumnCount45(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 46.
*/
static int selectColumnCount46(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 47.
*/
static int selectColumnCount47(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 48.
*/
static int selectColumnCount48(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 49.
*/
static int selectColumnCount49(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 50.
*/
static int selectColumnCount50(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 51.
*/
static int selectColumnCount51(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 52.
*/
static int selectColumnCount52(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 53.
*/
static int selectColumnCount53(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 54.
*/
static int selectColumnCount54(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 55.
*/
static int selectColumnCount55(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 56.
*/
static int selectColumnCount56(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 57.
*/
static int selectColumnCount57(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 58.
*/
static int selectColumnCount58(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 59.
*/
static int selectColumnCount59(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 60.
*/
static int selectColumnCount60(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 61.
*/
static int selectColumnCount61(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 62.
*/
static int selectColumnCount62(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 63.
*/
static int selectColumnCount63(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 64.
*/
static int selectColumnCount64(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 65.
*/
static int selectColumnCount65(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 66.
*/
static int selectColumnCount66(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 67.
*/
static int selectColumnCount67(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 68.
*/
static int selectColumnCount68(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 69.
*/
static int selectColumnCount69(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 70.
*/
static int selectColumnCount70(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 71.
*/
static int selectColumnCount71(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 72.
*/
static int selectColumnCount72(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 73.
*/
static int selectColumnCount73(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 74.
*/
static int selectColumnCount74(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 75.
*/
static int selectColumnCount75(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 76.
*/
static int selectColumnCount76(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 77.
*/
static int selectColumnCount77(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 78.
*/
static int selectColumnCount78(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 79.
*/
static int selectColumnCount79(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 80.
*/
static int selectColumnCount80(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 81.
*/
static int selectColumnCount81(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 82.
*/
static int selectColumnCount82(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 83.
*/
static int selectColumnCount83(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 84.
*/
static int selectColumnCount84(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 85.
*/
static int selectColumnCount85(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 86.
*/
static int selectColumnCount86(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 87.
*/
static int selectColumnCount87(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 88.
*/
static int selectColumnCount88(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 89.
*/
static int selectColumnCount89(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 90.
*/
static int selectColumnCount90(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 91.
*/
static int selectColumnCount91(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 92.
*/
static int selectColumnCount92(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 93.
*/
static int selectColumnCount93(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 94.
*/
static int selectColumnCount94(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 95.
*/
static int selectColumnCount95(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 96.
*/
static int selectColumnCount96(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 97.
*/
static int selectColumnCount97(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 98.
*/
static int selectColumnCount98(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 99.
*/
static int selectColumnCount99(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 100.
*/
static int selectColumnCount100(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 101.
*/
static int selectColumnCount101(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 102.
*/
static int selectColumnCount102(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 103.
*/
static int selectColumnCount103(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 104.
*/
static int selectColumnCount104(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 105.
*/
static int selectColumnCount105(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 106.
*/
static int selectColumnCount106(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 107.
*/
static int selectColumnCount107(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 108.
*/
static int selectColumnCount108(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 109.
*/
static int selectColumnCount109(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 110.
*/
static int selectColumnCount110(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 111.
*/
static int selectColumnCount111(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 112.
*/
static int selectColumnCount112(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 113.
*/
static int selectColumnCount113(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 114.
*/
static int selectColumnCount114(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 115.
*/
static int selectColumnCount115(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 116.
*/
static int selectColumnCount116(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 117.
*/
static int selectColumnCount117(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 118.
*/
static int selectColumnCount118(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 119.
*/
static int selectColumnCount119(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 120.
*/
static int selectColumnCount120(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 121.
*/
static int selectColumnCount121(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 122.
*/
static int selectColumnCount122(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 123.
*/
static int selectColumnCount123(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 124.
*/
static int selectColumnCount124(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 125.
*/
static int selectColumnCount125(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 126.
*/
static int selectColumnCount126(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 127.
*/
static int selectColumnCount127(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 128.
*/
static int selectColumnCount128(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 129.
*/
static int selectColumnCount129(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 130.
*/
static int selectColumnCount130(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 131.
*/
static int selectColumnCount131(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 132.
*/
static int selectColumnCount132(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 133.
*/
static int selectColumnCount133(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 134.
*/
static int selectColumnCount134(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 135.
*/
static int selectColumnCount135(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 136.
*/
static int selectColumnCount136(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 137.
*/
static int selectColumnCount137(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 138.
*/
static int selectColumnCount138(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 139.
*/
static int selectColumnCount139(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 140.
*/
static int selectColumnCount140(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 141.
*/
static int selectColumnCount141(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 142.
*/
static int selectColumnCount142(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 143.
*/
static int selectColumnCount143(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 144.
*/
static int selectColumnCount144(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 145.
*/
static int selectColumnCount145(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 146.
*/
static int selectColumnCount146(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 147.
*/
static int selectColumnCount147(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 148.
*/
static int selectColumnCount148(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 149.
*/
static int selectColumnCount149(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 150.
*/
static int selectColumnCount150(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 151.
*/
static int selectColumnCount151(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 152.
*/
static int selectColumnCount152(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 153.
*/
static int selectColumnCount153(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 154.
*/
static int selectColumnCount154(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 155.
*/
static int selectColumnCount155(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 156.
*/
static int selectColumnCount156(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 157.
*/
static int selectColumnCount157(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 158.
*/
static int selectColumnCount158(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 159.
*/
static int selectColumnCount159(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 160.
*/
static int selectColumnCount160(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 161.
*/
static int selectColumnCount161(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 162.
*/
static int selectColumnCount162(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 163.
*/
static int selectColumnCount163(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 164.
*/
static int selectColumnCount164(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 165.
*/
static int selectColumnCount165(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 166.
*/
static int selectColumnCount166(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 167.
*/
static int selectColumnCount167(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 168.
*/
static int selectColumnCount168(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 169.
*/
static int selectColumnCount169(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 170.
*/
static int selectColumnCount170(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 171.
*/
static int selectColumnCount171(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 172.
*/
static int selectColumnCount172(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 173.
*/
static int selectColumnCount173(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 174.
*/
static int selectColumnCount174(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 175.
*/
static int selectColumnCount175(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 176.
*/
static int selectColumnCount176(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 177.
*/
static int selectColumnCount177(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 178.
*/
static int selectColumnCount178(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 179.
*/
static int selectColumnCount179(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 180.
*/
static int selectColumnCount180(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 181.
*/
static int selectColumnCount181(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 182.
*/
static int selectColumnCount182(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 183.
*/
static int selectColumnCount183(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 184.
*/
static int selectColumnCount184(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 185.
*/
static int selectColumnCount185(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 186.
*/
static int selectColumnCount186(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 187.
*/
static int selectColumnCount187(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 188.
*/
static int selectColumnCount188(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 189.
*/
static int selectColumnCount189(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 190.
*/
static int selectColumnCount190(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 191.
*/
static int selectColumnCount191(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 192.
*/
static int selectColumnCount192(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 193.
*/
static int selectColumnCount193(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 194.
*/
static int selectColumnCount194(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 195.
*/
static int selectColumnCount195(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 196.
*/
static int selectColumnCount196(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 197.
*/
static int selectColumnCount197(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 198.
*/
static int selectColumnCount198(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 199.
*/
static int selectColumnCount199(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 200.
*/
static int selectColumnCount200(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 201.
*/
static int selectColumnCount201(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 202.
*/
static int selectColumnCount202(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 203.
*/
static int selectColumnCount203(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 204.
*/
static int selectColumnCount204(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 205.
*/
static int selectColumnCount205(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 206.
*/
static int selectColumnCount206(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 207.
*/
static int selectColumnCount207(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 208.
*/
static int selectColumnCount208(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 209.
*/
static int selectColumnCount209(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 210.
*/
static int selectColumnCount210(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 211.
*/
static int selectColumnCount211(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 212.
*/
static int selectColumnCount212(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 213.
*/
static int selectColumnCount213(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 214.
*/
static int selectColumnCount214(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 215.
*/
static int selectColumnCount215(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 216.
*/
static int selectColumnCount216(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 217.
*/
static int selectColumnCount217(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 218.
*/
static int selectColumnCount218(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 219.
*/
static int selectColumnCount219(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 220.
*/
static int selectColumnCount220(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 221.
*/
static int selectColumnCount221(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 222.
*/
static int selectColumnCount222(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 223.
*/
static int selectColumnCount223(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 224.
*/
static int selectColumnCount224(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 225.
*/
static int selectColumnCount225(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 226.
*/
static int selectColumnCount226(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 227.
*/
static int selectColumnCount227(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 228.
*/
static int selectColumnCount228(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 229.
*/
static int selectColumnCount229(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 230.
*/
static int selectColumnCount230(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 231.
*/
static int selectColumnCount231(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 232.
*/
static int selectColumnCount232(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 233.
*/
static int selectColumnCount233(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 234.
*/
static int selectColumnCount234(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 235.
*/
static int selectColumnCount235(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 236.
*/
static int selectColumnCount236(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 237.
*/
static int selectColumnCount237(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 238.
*/
static int selectColumnCount238(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 239.
*/
static int selectColumnCount239(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 240.
*/
static int selectColumnCount240(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 241.
*/
static int selectColumnCount241(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 242.
*/
static int selectColumnCount242(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 243.
*/
static int selectColumnCount243(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 244.
*/
static int selectColumnCount244(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 245.
*/
static int selectColumnCount245(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 246.
*/
static int selectColumnCount246(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 247.
*/
static int selectColumnCount247(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 248.
*/
static int selectColumnCount248(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 249.
*/
static int selectColumnCount249(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 250.
*/
static int selectColumnCount250(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 251.
*/
static int selectColumnCount251(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 252.
*/
static int selectColumnCount252(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 253.
*/
static int selectColumnCount253(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 254.
*/
static int selectColumnCount254(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 255.
*/
static int selectColumnCount255(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 256.
*/
static int selectColumnCount256(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 257.
*/
static int selectColumnCount257(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 258.
*/
static int selectColumnCount258(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 259.
*/
static int selectColumnCount259(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 260.
*/
static int selectColumnCount260(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 261.
*/
static int selectColumnCount261(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 262.
*/
static int selectColumnCount262(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 263.
*/
static int selectColumnCount263(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 264.
*/
static int selectColumnCount264(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 265.
*/
static int selectColumnCount265(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 266.
*/
static int selectColumnCount266(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 267.
*/
static int selectColumnCount267(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 268.
*/
static int selectColumnCount268(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 269.
*/
static int selectColumnCount269(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 270.
*/
static int selectColumnCount270(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 271.
*/
static int selectColumnCount271(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 272.
*/
static int selectColumnCount272(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 273.
*/
static int selectColumnCount273(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 274.
*/
static int selectColumnCount274(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 275.
*/
static int selectColumnCount275(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 276.
*/
static int selectColumnCount276(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 277.
*/
static int selectColumnCount277(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 278.
*/
static int selectColumnCount278(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 279.
*/
static int selectColumnCount279(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 280.
*/
static int selectColumnCount280(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 281.
*/
static int selectColumnCount281(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 282.
*/
static int selectColumnCount282(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 283.
*/
static int selectColumnCount283(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 284.
*/
static int selectColumnCount284(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 285.
*/
static int selectColumnCount285(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 286.
*/
static int selectColumnCount286(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 287.
*/
static int selectColumnCount287(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 288.
*/
static int selectColumnCount288(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 289.
*/
static int selectColumnCount289(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 290.
*/
static int selectColumnCount290(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 291.
*/
static int selectColumnCount291(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 292.
*/
static int selectColumnCount292(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 293.
*/
static int selectColumnCount293(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 294.
*/
static int selectColumnCount294(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 295.
*/
static int selectColumnCount295(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 296.
*/
static int selectColumnCount296(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 297.
*/
static int selectColumnCount297(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 298.
*/
static int selectColumnCount298(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 299.
*/
static int selectColumnCount299(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 300.
*/
static int selectColumnCount300(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 301.
*/
static int selectColumnCount301(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 302.
*/
static int selectColumnCount302(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 303.
*/
static int selectColumnCount303(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 304.
*/
static int selectColumnCount304(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 305.
*/
static int selectColumnCount305(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 306.
*/
static int selectColumnCount306(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 307.
*/
static int selectColumnCount307(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 308.
*/
static int selectColumnCount308(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 309.
*/
static int selectColumnCount309(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 310.
*/
static int selectColumnCount310(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 311.
*/
static int selectColumnCount311(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 312.
*/
static int selectColumnCount312(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 313.
*/
static int selectColumnCount313(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 314.
*/
static int selectColumnCount314(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 315.
*/
static int selectColumnCount315(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 316.
*/
static int selectColumnCount316(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 317.
*/
static int selectColumnCount317(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 318.
*/
static int selectColumnCount318(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 319.
*/
static int selectColumnCount319(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 320.
*/
static int selectColumnCount320(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 321.
*/
static int selectColumnCount321(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 322.
*/
static int selectColumnCount322(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 323.
*/
static int selectColumnCount323(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 324.
*/
static int selectColumnCount324(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 325.
*/
static int selectColumnCount325(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 326.
*/
static int selectColumnCount326(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 327.
*/
static int selectColumnCount327(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 328.
*/
static int selectColumnCount328(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 329.
*/
static int selectColumnCount329(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 330.
*/
static int selectColumnCount330(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 331.
*/
static int selectColumnCount331(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 332.
*/
static int selectColumnCount332(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 333.
*/
static int selectColumnCount333(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 334.
*/
static int selectColumnCount334(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 335.
*/
static int selectColumnCount335(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 336.
*/
static int selectColumnCount336(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 337.
*/
static int selectColumnCount337(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 338.
*/
static int selectColumnCount338(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 339.
*/
static int selectColumnCount339(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 340.
*/
static int selectColumnCount340(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 341.
*/
static int selectColumnCount341(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 342.
*/
static int selectColumnCount342(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 343.
*/
static int selectColumnCount343(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 344.
*/
static int selectColumnCount344(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 345.
*/
static int selectColumnCount345(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 346.
*/
static int selectColumnCount346(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 347.
*/
static int selectColumnCount347(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 348.
*/
static int selectColumnCount348(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 349.
*/
static int selectColumnCount349(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 350.
*/
static int selectColumnCount350(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 351.
*/
static int selectColumnCount351(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 352.
*/
static int selectColumnCount352(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 353.
*/
static int selectColumnCount353(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 354.
*/
static int selectColumnCount354(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 355.
*/
static int selectColumnCount355(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 356.
*/
static int selectColumnCount356(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 357.
*/
static int selectColumnCount357(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 358.
*/
static int selectColumnCount358(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 359.
*/
static int selectColumnCount359(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 360.
*/
static int selectColumnCount360(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 361.
*/
static int selectColumnCount361(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 362.
*/
static int selectColumnCount362(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 363.
*/
static int selectColumnCount363(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 364.
*/
static int selectColumnCount364(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 365.
*/
static int selectColumnCount365(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 366.
*/
static int selectColumnCount366(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 367.
*/
static int selectColumnCount367(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 368.
*/
static int selectColumnCount368(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 369.
*/
static int selectColumnCount369(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 370.
*/
static int selectColumnCount370(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 371.
*/
static int selectColumnCount371(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 372.
*/
static int selectColumnCount372(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 373.
*/
static int selectColumnCount373(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 374.
*/
static int selectColumnCount374(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 375.
*/
static int selectColumnCount375(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 376.
*/
static int selectColumnCount376(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 377.
*/
static int selectColumnCount377(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 378.
*/
static int selectColumnCount378(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 379.
*/
static int selectColumnCount379(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 380.
*/
static int selectColumnCount380(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 381.
*/
static int selectColumnCount381(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 382.
*/
static int selectColumnCount382(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 383.
*/
static int selectColumnCount383(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 384.
*/
static int selectColumnCount384(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 385.
*/
static int selectColumnCount385(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 386.
*/
static int selectColumnCount386(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 387.
*/
static int selectColumnCount387(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 388.
*/
static int selectColumnCount388(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 389.
*/
static int selectColumnCount389(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 390.
*/
static int selectColumnCount390(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 391.
*/
static int selectColumnCount391(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 392.
*/
static int selectColumnCount392(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 393.
*/
static int selectColumnCount393(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 394.
*/
static int selectColumnCount394(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 395.
*/
static int selectColumnCount395(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 396.
*/
static int selectColumnCount396(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 397.
*/
static int selectColumnCount397(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 398.
*/
static int selectColumnCount398(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 399.
*/
static int selectColumnCount399(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 400.
*/
static int selectColumnCount400(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 401.
*/
static int selectColumnCount401(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 402.
*/
static int selectColumnCount402(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 403.
*/
static int selectColumnCount403(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 404.
*/
static int selectColumnCount404(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 405.
*/
static int selectColumnCount405(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 406.
*/
static int selectColumnCount406(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 407.
*/
static int selectColumnCount407(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 408.
*/
static int selectColumnCount408(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 409.
*/
static int selectColumnCount409(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 410.
*/
static int selectColumnCount410(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 411.
*/
static int selectColumnCount411(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 412.
*/
static int selectColumnCount412(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 413.
*/
static int selectColumnCount413(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 414.
*/
static int selectColumnCount414(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 415.
*/
static int selectColumnCount415(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 416.
*/
static int selectColumnCount416(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 417.
*/
static int selectColumnCount417(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 418.
*/
static int selectColumnCount418(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 419.
*/
static int selectColumnCount419(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 420.
*/
static int selectColumnCount420(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 421.
*/
static int selectColumnCount421(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 422.
*/
static int selectColumnCount422(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 423.
*/
static int selectColumnCount423(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 424.
*/
static int selectColumnCount424(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 425.
*/
static int selectColumnCount425(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 426.
*/
static int selectColumnCount426(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 427.
*/
static int selectColumnCount427(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 428.
*/
static int selectColumnCount428(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 429.
*/
static int selectColumnCount429(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 430.
*/
static int selectColumnCount430(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 431.
*/
static int selectColumnCount431(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 432.
*/
static int selectColumnCount432(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 433.
*/
static int selectColumnCount433(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 434.
*/
static int selectColumnCount434(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 435.
*/
static int selectColumnCount435(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 436.
*/
static int selectColumnCount436(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 437.
*/
static int selectColumnCount437(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 438.
*/
static int selectColumnCount438(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 439.
*/
static int selectColumnCount439(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 440.
*/
static int selectColumnCount440(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 441.
*/
static int selectColumnCount441(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 442.
*/
static int selectColumnCount442(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 443.
*/
static int selectColumnCount443(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 444.
*/
static int selectColumnCount444(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 445.
*/
static int selectColumnCount445(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 446.
*/
static int selectColumnCount446(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 447.
*/
static int selectColumnCount447(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 448.
*/
static int selectColumnCount448(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 449.
*/
static int selectColumnCount449(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 450.
*/
static int selectColumnCount450(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 451.
*/
static int selectColumnCount451(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 452.
*/
static int selectColumnCount452(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 453.
*/
static int selectColumnCount453(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 454.
*/
static int selectColumnCount454(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 455.
*/
static int selectColumnCount455(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 456.
*/
static int selectColumnCount456(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 457.
*/
static int selectColumnCount457(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 458.
*/
static int selectColumnCount458(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 459.
*/
static int selectColumnCount459(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 460.
*/
static int selectColumnCount460(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 461.
*/
static int selectColumnCount461(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 462.
*/
static int selectColumnCount462(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 463.
*/
static int selectColumnCount463(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 464.
*/
static int selectColumnCount464(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 465.
*/
static int selectColumnCount465(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 466.
*/
static int selectColumnCount466(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 467.
*/
static int selectColumnCount467(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 468.
*/
static int selectColumnCount468(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 469.
*/
static int selectColumnCount469(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 470.
*/
static int selectColumnCount470(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 471.
*/
static int selectColumnCount471(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 472.
*/
static int selectColumnCount472(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 473.
*/
static int selectColumnCount473(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 474.
*/
static int selectColumnCount474(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 475.
*/
static int selectColumnCount475(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 476.
*/
static int selectColumnCount476(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 477.
*/
static int selectColumnCount477(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 478.
*/
static int selectColumnCount478(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 479.
*/
static int selectColumnCount479(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 480.
*/
static int selectColumnCount480(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 481.
*/
static int selectColumnCount481(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 482.
*/
static int selectColumnCount482(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 483.
*/
static int selectColumnCount483(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 484.
*/
static int selectColumnCount484(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 485.
*/
static int selectColumnCount485(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 486.
*/
static int selectColumnCount486(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 487.
*/
static int selectColumnCount487(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 488.
*/
static int selectColumnCount488(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 489.
*/
static int selectColumnCount489(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 490.
*/
static int selectColumnCount490(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 491.
*/
static int selectColumnCount491(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 492.
*/
static int selectColumnCount492(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 493.
*/
static int selectColumnCount493(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 494.
*/
static int selectColumnCount494(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 495.
*/
static int selectColumnCount495(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 496.
*/
static int selectColumnCount496(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 497.
*/
static int selectColumnCount497(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}

/*
** Return the number of result columns for sub-select 498.
*/
static int selectColumnCount498(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 0;
}

/*
** Return the number of result columns for sub-select 499.
*/
static int selectColumnCount499(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 1;
}

/*
** Return the number of result columns for sub-select 500.
*/
static int selectColumnCount500(Select *p){
  int n = 0;
  while( p ){
    n += p->pEList->nExpr;
    p = p->pPrior;
  }
  return n + 2;
}



int sqlite3Select(
  Parse *pParse,         /* The parser context */
  Select *p,             /* The SELECT statement being coded. */
  SelectDest *pDest      /* What to do with the query results */
){
  int i, j;              /* Loop counters */
  WhereInfo *pWInfo;     /* Return from sqlite3WhereBegin() */
  Vdbe *v;               /* The virtual machine under construction */
  int isAgg;             /* True for select lists like "count(*)" */
  ExprList *pEList = 0;  /* List of columns to extract. */
  SrcList *pTabList;     /* List of tables to select from */
  Expr *pWhere;          /* The WHERE clause.  May be NULL */
  ExprList *pGroupBy;    /* The GROUP BY clause.  May be NULL */
  Expr *pHaving;         /* The HAVING clause.  May be NULL */
  int rc = 1;            /* Value to return from this function */
  DistinctCtx sDistinct; /* Info on how to code the DISTINCT keyword */
  SortCtx sSort;         /* Info on how to code the ORDER BY clause */
  sqlite3 *db;           /* The database connection */

  db = pParse->db;
  v = sqlite3GetVdbe(pParse);
  if( p==0 || db->mallocFailed || pParse->nErr ){
    return 1;
  }
  memset(&sSort, 0, sizeof(sSort));
  sSort.pOrderBy = p->pOrderBy;
  pTabList = p->pSrc;
  pEList = p->pEList;
  pWhere = p->pWhere;
  pGroupBy = p->pGroupBy;
  pHaving = p->pHaving;
  sDistinct.isTnct = (p->selFlags & SF_Distinct)!=0;
  isAgg = (p->selFlags & SF_Aggregate)!=0;

  /* If there is both a GROUP BY and an ORDER BY clause and they are
  ** identical, then it may be possible to disable the ORDER BY clause
  ** on the grounds that the GROUP BY will cause elements to come out
  ** in the correct order.
  **
  ** Transform a DISTINCT query into a GROUP BY when the result set
  ** and the ORDER BY are the same.
  */
  if( (p->selFlags & (SF_Distinct|SF_Aggregate))==SF_Distinct
   && sqlite3ExprListCompare(sSort.pOrderBy, pEList, -1)==0
   && p->pWin==0
  ){
    p->selFlags &= ~SF_Distinct;
    pGroupBy = p->pGroupBy = sqlite3ExprListDup(db, pEList, 0);
    p->selFlags |= SF_Aggregate;
    /* Notice that even thought SF_Distinct has been cleared from p->selFlags,
    ** the sDistinct.isTnct is still set.  Hence, isTnct represents the
    ** original setting of the SF_Distinct flag, not the current setting */
    assert( sDistinct.isTnct );
    sDistinct.isTnct = 2;
  }

  if( sSort.pOrderBy ){
    sSort.iECursor = pParse->nTab++;
  }else{
    sSort.iECursor = -1;
  }
  for(i=0, j=0; i<pEList->nExpr; i++){
    if( pEList->a[i].pExpr==0 ) j++;
  }
  pWInfo = sqlite3WhereBegin(pParse, pTabList, pWhere, sSort.pOrderBy, p->pEList, 0, 0);
  if( pWInfo==0 ) goto select_end;
  sqlite3WhereEnd(pWInfo);
  rc = (pParse->nErr>0) + j;

select_end:
  sqlite3ExprListDelete(db, pGroupBy);
  return rc;
}

/*
** Return true if the select has a window function.
*/
int sqlite3SelectHasWindow(Select *p){
  return p && p->pWin!=0;
}
